#include "rosenmorse/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "rosenmorse/eckart.hpp"
#include "rosenmorse/numerics.hpp"
#include "rosenmorse/reference.hpp"
#include "rosenmorse/rodrigues.hpp"
#include "rosenmorse/susy.hpp"
#include "rosenmorse/table.hpp"
#include "rosenmorse/trm.hpp"

namespace rm {

namespace {

constexpr double kPi = std::numbers::pi;

using ParamList = std::vector<std::pair<Rational, Rational>>;

ParamList default_trm_pairs() { return {{Rational(0), Rational(1)}, {Rational(1), Rational(50)}, {Rational(1, 4), Rational(1)}}; }

ParamList pairs_or_default(const VerifyOptions& o, ParamList defaults) {
    if (!o.a && !o.b) return defaults;
    return {{o.a.value_or(Rational(0)), o.b.value_or(Rational(1))}};
}

std::string tag(const Rational& a, const Rational& b) { return "a=" + a.str() + ",b=" + b.str(); }

void polynomials_suite(const VerifyOptions& o, VerifyReport& r) {
    for (const auto& [a, b] : pairs_or_default(o, default_trm_pairs())) {
        r.add("ode_residual_nonzero_coeffs[" + tag(a, b) + ",n=1..12]",
              static_cast<double>(trm_residual_nonzero_count(a, b, 12)), 0.0);
        const TrmParams<Rational> p(a, b);
        long eig_mismatch = 0;
        long degree_mismatch = 0;
        for (unsigned n = 1; n <= 12; ++n) {
            const auto lv = trm_level(p, n);
            const Rational m(static_cast<long>(n) - 1);
            const Rational lhs = -lv.beta * (Rational(1) - lv.beta) - a * (a + Rational(1));
            if (lhs != -m * (Rational(2) * lv.beta + m - Rational(1))) ++eig_mismatch;
            if (trm_polynomial(p, n).degree() != static_cast<int>(n) - 1) ++degree_mismatch;
        }
        r.add("eigenvalue_identity_mismatches[" + tag(a, b) + "]", static_cast<double>(eig_mismatch), 0.0);
        r.add("degree_mismatches[" + tag(a, b) + "]", static_cast<double>(degree_mismatch), 0.0);
    }
}

void orthogonality_suite(const VerifyOptions& o, VerifyReport& r) {
    for (const auto& [a, b] : pairs_or_default(o, default_trm_pairs())) {
        const auto g = trm_gram(a.to_double(), b.to_double(), 8);
        const double dev = (g - Eigen::MatrixXd::Identity(8, 8)).cwiseAbs().maxCoeff();
        r.add("gram_max_deviation[" + tag(a, b) + ",n=1..8]", dev, 1e-8);
    }
}

void normalization_suite(const VerifyOptions& o, VerifyReport& r) {
    if (o.a && !o.a->is_zero()) throw std::invalid_argument("verify normalization: closed-form K_n needs a = 0");
    std::vector<double> bs = o.b ? std::vector<double>{o.b->to_double()} : std::vector<double>{1.0, 5.0};
    for (double b : bs) {
        const TrmParams<double> p(0.0, b);
        for (unsigned n = 1; n <= 6; ++n) {
            const auto sol = trm_solution(p, n, Normalization::closed_form_or_quadrature);
            const auto q = integrate(
                [&](double z) {
                    const double v = trm_wavefunction(sol, z);
                    return v * v;
                },
                {0.0, kPi}, {QuadratureScheme::double_exponential, 1e-13, 0.0, 15});
            r.add("norm_rel_error[b=" + format_double(b) + ",n=" + std::to_string(n) + "]", std::abs(q.value - 1.0),
                  1e-10);
        }
        if (b == 1.0) {
            const double antiderivative = std::sqrt(-std::expm1(-2.0 * kPi) / 8.0);
            r.add("K_1(b=1)_vs_antiderivative", std::abs(trm_knorm(1.0, 1) - antiderivative), 1e-12);
        }
    }
}

void fdm_suite(const VerifyOptions& o, VerifyReport& r) {
    const double a = o.a ? o.a->to_double() : 1.0;
    const double b = o.b ? o.b->to_double() : 50.0;
    const long grid = o.grid.value_or(4000);
    const auto check = trm_fdm_check(a, b, grid, 5);
    const double tol = a >= 1.0 ? 1e-5 : 1e-3;
    for (std::size_t i = 0; i < check.exact.size(); ++i) {
        r.add("eps_rel_error[n=" + std::to_string(i + 1) + ",N=" + std::to_string(grid) + "]",
              std::abs(check.fdm[i] - check.exact[i]) / std::abs(check.exact[i]), tol);
    }
    const auto orders = check.orders();
    for (std::size_t i = 0; i < orders.size(); ++i) {
        r.add("convergence_order_minus_2[n=" + std::to_string(i + 1) + "]", std::abs(orders[i] - 2.0), 0.2);
    }
}

void susy_suite(const VerifyOptions& o, VerifyReport& r) {
    const double a = o.a ? o.a->to_double() : 1.0;
    const double b = o.b ? o.b->to_double() : 50.0;
    r.add("A-R1_max", ground_state_annihilation_residual(a, b, 1e-4), 1e-7);
    for (unsigned n = 2; n <= 5; ++n) {
        r.add("partner_identity[n=" + std::to_string(n) + "]", partner_identity_residual(a, b, n, 1e-4), 1e-7);
        r.add("A+A-_factorization[n=" + std::to_string(n) + "]", factorization_residual(a, b, n, 4e-4), 1e-6);
    }
    const auto ric = riccati_residuals(a, b, 1e-2);
    r.add("riccati_U2+U'+eps1-v", ric.hamiltonian, 1e-10);
    r.add("riccati_U2-U'+eps1-v~", ric.partner, 1e-10);
    const Rational ar = o.a.value_or(Rational(1));
    const Rational br = o.b.value_or(Rational(50));
    long mismatches = 0;
    for (unsigned n = 2; n <= 10; ++n) {
        const auto lhs = trm_level(TrmParams<Rational>(ar + Rational(1), br), n - 1).epsilon;
        const auto rhs = trm_level(TrmParams<Rational>(ar, br), n).epsilon;
        if (lhs != rhs) ++mismatches;
    }
    r.add("isospectral_exact_mismatches[n=2..10]", static_cast<double>(mismatches), 0.0);
}

void classical_suite(VerifyReport& r) {
    constexpr unsigned kMaxM = 8;
    const PresetParams pp;
    const auto presets = table1_presets(pp);
    std::vector<reference::Family<Rational>> oracles{
        reference::hermite<Rational>(kMaxM),
        reference::laguerre<Rational>(kMaxM, pp.laguerre_nu),
        reference::jacobi<Rational>(kMaxM, pp.jacobi_nu, pp.jacobi_mu),
        reference::gegenbauer<Rational>(kMaxM, pp.gegenbauer_lambda),
        reference::legendre<Rational>(kMaxM),
        reference::chebyshev1<Rational>(kMaxM),
        reference::chebyshev2<Rational>(kMaxM),
    };
    for (std::size_t f = 0; f < presets.size(); ++f) {
        const auto& spec = presets[f];
        long nonzero = 0;
        long not_proportional = 0;
        std::vector<Polynomial<double>> members;
        for (unsigned m = 0; m <= kMaxM; ++m) {
            const auto res = rodrigues_generate(spec, m);
            nonzero += static_cast<long>(sturm_liouville_residual(spec, res).coeffs().size());
            if (f < oracles.size() && !reference::proportional(res.poly, oracles[f][m])) ++not_proportional;
            members.push_back(poly_to_float(res.poly));
        }
        r.add("sl_residual_nonzero_coeffs[" + spec.label + "]", static_cast<double>(nonzero), 0.0);
        if (f >= oracles.size()) continue;
        r.add("recurrence_mismatches[" + spec.label + "]", static_cast<double>(not_proportional), 0.0);
        double worst = 0.0;
        const QuadratureSpec qs{QuadratureScheme::double_exponential, 1e-12, 1e-12, 15};
        auto inner = [&](const Polynomial<double>& p, const Polynomial<double>& q) {
            if (spec.gap_weight) {
                return integrate_gaps([&](double x, double lo,
                                          double hi) { return spec.gap_weight(lo, hi) * p(x) * q(x); },
                                      spec.domain, qs)
                    .value;
            }
            // The weight underflows to zero in the tails before the polynomials overflow.
            return integrate(
                       [&](double x) {
                           const double w = spec.weight(x);
                           return w == 0.0 ? 0.0 : w * p(x) * q(x);
                       },
                       spec.domain, qs)
                .value;
        };
        std::vector<double> norms;
        for (const auto& p : members) norms.push_back(std::sqrt(inner(p, p)));
        for (unsigned i = 0; i <= kMaxM; ++i) {
            for (unsigned j = i + 1; j <= kMaxM; ++j) {
                worst = std::max(worst, std::abs(inner(members[i], members[j])) / (norms[i] * norms[j]));
            }
        }
        r.add("orthogonality_max[" + spec.label + "]", worst, 1e-10);
    }
}

void eckart_suite(const VerifyOptions& o, VerifyReport& r) {
    const Rational a = o.a.value_or(Rational(0));
    const Rational b = o.b.value_or(Rational(50));
    const EckartParams<Rational> p(a, b);
    const auto levels = eckart_spectrum(p);
    const double expected_count = std::floor(std::sqrt(b.to_double()) - a.to_double());
    r.add("level_count_minus_floor(sqrt(b)-a)", std::abs(static_cast<double>(levels.size()) - expected_count), 0.0);
    long identity_mismatch = 0;
    for (const auto& lv : levels) {
        const Rational shifted = Rational(static_cast<long>(lv.n)) + a;
        const Rational d = shifted - b / shifted;
        if (lv.epsilon + Rational(2) * b != -(d * d)) ++identity_mismatch;
    }
    r.add("eps+2b_identity_mismatches", static_cast<double>(identity_mismatch), 0.0);
    const auto check = eckart_fdm_check(a.to_double(), b.to_double(), o.grid.value_or(60000),
                                        static_cast<unsigned>(std::min<std::size_t>(3, levels.size())));
    for (std::size_t i = 0; i < check.exact.size(); ++i) {
        r.add("fdm_rel_error[n=" + std::to_string(i + 1) + "]",
              std::abs(check.fdm[i] - check.exact[i]) / std::abs(check.exact[i]), 1e-3);
    }
}

}  // namespace

bool VerifyReport::passed() const {
    return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
}

const std::vector<std::string>& verify_suite_names() {
    static const std::vector<std::string> names{"polynomials", "orthogonality", "normalization", "fdm",
                                                "susy",        "classical",     "eckart"};
    return names;
}

VerifyReport run_verify_suite(std::string_view suite, const VerifyOptions& opts) {
    VerifyReport r{std::string(suite), {}};
    if (suite == "polynomials") {
        polynomials_suite(opts, r);
    } else if (suite == "orthogonality") {
        orthogonality_suite(opts, r);
    } else if (suite == "normalization") {
        normalization_suite(opts, r);
    } else if (suite == "fdm") {
        fdm_suite(opts, r);
    } else if (suite == "susy") {
        susy_suite(opts, r);
    } else if (suite == "classical") {
        classical_suite(r);
    } else if (suite == "eckart") {
        eckart_suite(opts, r);
    } else {
        throw std::invalid_argument("unknown verify suite '" + std::string(suite) + "'");
    }
    return r;
}

long trm_residual_nonzero_count(const Rational& a, const Rational& b, unsigned n_max) {
    const TrmParams<Rational> p(a, b);
    long nonzero = 0;
    for (unsigned n = 1; n <= n_max; ++n) {
        const auto lv = trm_level(p, n);
        nonzero += static_cast<long>(trm_ode_residual(p, lv, trm_polynomial(p, n)).coeffs().size());
    }
    return nonzero;
}

double FdmSpectrumCheck::max_rel_error() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < exact.size(); ++i) worst = std::max(worst, std::abs(fdm[i] - exact[i]) / std::abs(exact[i]));
    return worst;
}

std::vector<double> FdmSpectrumCheck::orders() const {
    std::vector<double> out;
    for (std::size_t i = 0; i < exact.size(); ++i) {
        out.push_back(std::log2(std::abs(fdm[i] - exact[i]) / std::abs(fdm_halved[i] - exact[i])));
    }
    return out;
}

std::vector<double> FdmSpectrumCheck::richardson() const {
    std::vector<double> out;
    for (std::size_t i = 0; i < fdm.size(); ++i) out.push_back((4.0 * fdm_halved[i] - fdm[i]) / 3.0);
    return out;
}

FdmSpectrumCheck trm_fdm_check(double a, double b, long grid, unsigned levels) {
    const TrmParams<double> p(a, b);
    FdmSpectrumCheck c;
    for (const auto& lv : trm_spectrum(p, levels)) c.exact.push_back(lv.epsilon);
    auto v = [&](double z) { return trm_potential(p, z); };
    c.fdm = eigenvalues_sturm(fdm_hamiltonian(v, grid, 0.0, kPi), levels);
    c.fdm_halved = eigenvalues_sturm(fdm_hamiltonian(v, 2 * grid + 1, 0.0, kPi), levels);
    return c;
}

FdmSpectrumCheck eckart_fdm_check(double a, double b, long grid, unsigned levels) {
    const EckartParams<double> p(a, b);
    FdmSpectrumCheck c;
    for (const auto& lv : eckart_spectrum(p)) {
        if (c.exact.size() == levels) break;
        c.exact.push_back(lv.epsilon);
    }
    auto v = [&](double z) { return eckart_potential(a, b, z); };
    c.fdm = eigenvalues_sturm(fdm_hamiltonian(v, grid, 0.0, kEckartBoxLength), levels);
    c.fdm_halved = eigenvalues_sturm(fdm_hamiltonian(v, 2 * grid + 1, 0.0, kEckartBoxLength), levels);
    return c;
}

}  // namespace rm
