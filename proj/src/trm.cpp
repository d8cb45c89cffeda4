#include "rosenmorse/trm.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace rm {

namespace {

constexpr double kPi = std::numbers::pi;

void check_domain(double z, const char* who) {
    if (!(z > 0.0 && z < kPi)) throw std::domain_error(std::string(who) + ": z must lie in (0, pi)");
}

double factorial(unsigned n) {
    double f = 1.0;
    for (unsigned k = 2; k <= n; ++k) f *= static_cast<double>(k);
    return f;
}

}  // namespace

double trm_potential(double a, double b, double z) {
    check_domain(z, "trm_potential");
    const double s = std::sin(z);
    return -2.0 * b * std::cos(z) / s + a * (a + 1.0) / (s * s);
}

double trm_knorm(double b, unsigned n) {
    if (n < 1) throw std::invalid_argument("trm_knorm: n must be >= 1");
    if (b == 0.0) throw std::domain_error("trm_knorm: closed form is singular at b = 0");
    const double nd = n;
    const double f = factorial(n);
    const double one_minus_exp = -std::expm1(-2.0 * kPi * b / nd);
    const double k2 = f * f * nd * nd * nd * one_minus_exp / (4.0 * b * (b * b + nd * nd * nd * nd));
    return std::sqrt(k2);
}

double trm_knorm_b0_limit(unsigned n) {
    if (n < 1) throw std::invalid_argument("trm_knorm_b0_limit: n must be >= 1");
    // (1 - exp(-2 pi b/n)) / (4b) -> pi/(2n), leaving (n!)^2 n^3 pi / (2n n^4).
    const double nd = n;
    return factorial(n) * std::sqrt(kPi / (2.0 * nd * nd));
}

double trm_wavefunction_raw(double a, double b, unsigned n, const Polynomial<double>& c, double z) {
    check_domain(z, "trm_wavefunction");
    if (n < 1) throw std::invalid_argument("trm_wavefunction: n must be >= 1");
    const double shifted = static_cast<double>(n) + a;
    const double sn = std::sin(z);
    const double cs = std::cos(z);
    // sin^(n-1) z C(cot z) as a homogeneous form in (cos z, sin z); avoids
    // evaluating cot z near the endpoints.
    const int d = static_cast<int>(n) - 1;
    double acc = c.coeff(static_cast<std::size_t>(d));
    double spow = 1.0;
    for (int k = d - 1; k >= 0; --k) {
        spow *= sn;
        acc = acc * cs + c.coeff(static_cast<std::size_t>(k)) * spow;
    }
    const double envelope = std::exp(-b * z / shifted) * std::pow(sn, a + 1.0);
    return envelope * acc;
}

double trm_quadrature_norm(double a, double b, unsigned n, const Polynomial<double>& c, const QuadratureSpec& spec) {
    QuadratureSpec rel = spec;
    rel.target_rel_tol = std::max(rel.target_rel_tol, 1e-14);
    const auto r = integrate(
        [&](double z) {
            const double v = trm_wavefunction_raw(a, b, n, c, z);
            return v * v;
        },
        {0.0, kPi}, rel);
    if (!(r.value > 0.0)) throw std::domain_error("trm_quadrature_norm: vanishing norm");
    return std::sqrt(r.value);
}

Eigen::MatrixXd trm_gram(double a, double b, unsigned n_max, const QuadratureSpec& spec) {
    const TrmParams<double> p(a, b);
    std::vector<Polynomial<double>> polys;
    std::vector<double> norms;
    for (unsigned n = 1; n <= n_max; ++n) {
        polys.push_back(trm_polynomial(p, n));
        norms.push_back(trm_quadrature_norm(a, b, n, polys.back(), spec));
    }
    Eigen::MatrixXd g(n_max, n_max);
    for (unsigned i = 0; i < n_max; ++i) {
        for (unsigned j = i; j < n_max; ++j) {
            const auto r = integrate(
                [&](double z) {
                    return trm_wavefunction_raw(a, b, i + 1, polys[i], z) / norms[i] *
                           trm_wavefunction_raw(a, b, j + 1, polys[j], z) / norms[j];
                },
                {0.0, kPi}, spec);
            g(i, j) = r.value;
            g(j, i) = r.value;
        }
    }
    return g;
}

std::vector<double> trm_nodes(double a, double b, unsigned n, const Polynomial<double>& c, int samples) {
    auto f = [&](double z) { return trm_wavefunction_raw(a, b, n, c, z); };
    std::vector<double> nodes;
    const double h = kPi / static_cast<double>(samples + 1);
    double z_prev = h;
    double f_prev = f(z_prev);
    for (int i = 2; i <= samples; ++i) {
        const double z = h * i;
        const double fz = f(z);
        if (fz == 0.0) continue;
        if (f_prev != 0.0 && (fz > 0.0) != (f_prev > 0.0)) {
            double lo = z_prev;
            double hi = z;
            double flo = f_prev;
            for (int it = 0; it < 200 && hi - lo > 4e-16 * hi; ++it) {
                const double mid = 0.5 * (lo + hi);
                const double fm = f(mid);
                if (fm == 0.0) {
                    lo = hi = mid;
                    break;
                }
                if ((fm > 0.0) == (flo > 0.0)) {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            nodes.push_back(0.5 * (lo + hi));
        }
        z_prev = z;
        f_prev = fz;
    }
    return nodes;
}

}  // namespace rm
