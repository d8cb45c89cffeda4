#include "rosenmorse/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/sinh_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

namespace rm {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

bool accepted(const QuadratureResult& r, const QuadratureSpec& spec) {
    return r.error <= spec.target_abs_tol || r.error <= spec.target_rel_tol * std::abs(r.value);
}

// One double-exponential pass at the given (L1-relative) tolerance.
QuadratureResult de_pass(const std::function<double(double)>& f, Interval iv, double tol, std::size_t max_ref) {
    QuadratureResult r;
    double l1 = 0.0;
    const bool lo_inf = std::isinf(iv.lo);
    const bool hi_inf = std::isinf(iv.hi);
    if (!lo_inf && !hi_inf) {
        boost::math::quadrature::tanh_sinh<double> q(max_ref);
        r.value = q.integrate(f, iv.lo, iv.hi, tol, &r.error, &l1);
    } else if (lo_inf && hi_inf) {
        boost::math::quadrature::sinh_sinh<double> q(max_ref);
        r.value = q.integrate(f, tol, &r.error, &l1);
    } else if (hi_inf) {
        boost::math::quadrature::exp_sinh<double> q(max_ref);
        r.value = q.integrate([&](double t) { return f(iv.lo + t); }, 0.0, std::numeric_limits<double>::infinity(),
                              tol, &r.error, &l1);
    } else {
        boost::math::quadrature::exp_sinh<double> q(max_ref);
        r.value = q.integrate([&](double t) { return f(iv.hi - t); }, 0.0, std::numeric_limits<double>::infinity(),
                              tol, &r.error, &l1);
    }
    // Level-difference estimates can undershoot the rounding floor.
    r.error = std::max(r.error, 8.0 * kEps * l1);
    return r;
}

QuadratureResult gaps_pass(const std::function<double(double, double, double)>& f, Interval iv, double tol,
                           std::size_t max_ref) {
    const double half = 0.5 * (iv.hi - iv.lo);
    const double width = iv.hi - iv.lo;
    // Boost hands the canonical integrand (t, tc) with tc = 1 - t for t >= 0
    // and tc = -(1 + t) for t < 0.
    auto g = [&](double t, double tc) {
        if (t >= 0.0) {
            const double d_hi = half * tc;
            return f(iv.hi - d_hi, width - d_hi, d_hi);
        }
        const double d_lo = -half * tc;
        return f(iv.lo + d_lo, d_lo, width - d_lo);
    };
    boost::math::quadrature::tanh_sinh<double> q(max_ref);
    QuadratureResult r;
    double l1 = 0.0;
    r.value = half * q.integrate(g, tol, &r.error, &l1);
    r.error = std::max(half * r.error, 8.0 * kEps * half * l1);
    return r;
}

QuadratureResult gauss_legendre(const std::function<double(double)>& f, Interval iv, const QuadratureSpec& spec) {
    if (std::isinf(iv.lo) || std::isinf(iv.hi)) {
        throw std::invalid_argument("integrate: composite Gauss-Legendre needs a finite interval");
    }
    using Rule = boost::math::quadrature::gauss<double, 20>;
    auto composite = [&](std::size_t panels) {
        const double width = (iv.hi - iv.lo) / static_cast<double>(panels);
        double sum = 0.0;
        double l1 = 0.0;
        for (std::size_t p = 0; p < panels; ++p) {
            const double lo = iv.lo + static_cast<double>(p) * width;
            double panel_l1 = 0.0;
            sum += Rule::integrate(f, lo, lo + width, &panel_l1);
            l1 += panel_l1;
        }
        return std::pair{sum, l1};
    };
    QuadratureResult r;
    auto [prev, l1] = composite(1);
    r.value = prev;
    r.error = std::numeric_limits<double>::infinity();
    for (int level = 1; level <= spec.max_refinement; ++level) {
        auto [cur, cur_l1] = composite(std::size_t{1} << level);
        r.value = cur;
        r.error = std::max(std::abs(cur - prev), 8.0 * kEps * cur_l1);
        if (accepted(r, spec)) break;
        prev = cur;
    }
    r.converged = accepted(r, spec);
    return r;
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, Interval iv, const QuadratureSpec& spec) {
    if (!(spec.target_abs_tol > 0.0)) throw std::invalid_argument("integrate: target_abs_tol must be positive");
    if (spec.max_refinement < 1) throw std::invalid_argument("integrate: max_refinement must be >= 1");
    if (!(iv.lo < iv.hi)) throw std::invalid_argument("integrate: empty interval");
    if (spec.scheme == QuadratureScheme::gauss_legendre) return gauss_legendre(f, iv, spec);

    const auto max_ref = static_cast<std::size_t>(spec.max_refinement);
    QuadratureResult r = de_pass(f, iv, spec.target_abs_tol, max_ref);
    if (!accepted(r, spec) && std::abs(r.value) > 1.0) {
        // Boost's tolerance is relative to the L1 norm; tighten it for large integrands.
        r = de_pass(f, iv, std::max(spec.target_abs_tol / std::abs(r.value), kEps), max_ref);
    }
    r.converged = accepted(r, spec);
    return r;
}

QuadratureResult integrate_gaps(const std::function<double(double, double, double)>& f, Interval iv,
                                const QuadratureSpec& spec) {
    if (!(spec.target_abs_tol > 0.0)) throw std::invalid_argument("integrate_gaps: target_abs_tol must be positive");
    if (spec.max_refinement < 1) throw std::invalid_argument("integrate_gaps: max_refinement must be >= 1");
    if (!std::isfinite(iv.lo) || !std::isfinite(iv.hi) || !(iv.lo < iv.hi)) {
        throw std::invalid_argument("integrate_gaps: needs a finite nonempty interval");
    }
    const auto max_ref = static_cast<std::size_t>(spec.max_refinement);
    QuadratureResult r = gaps_pass(f, iv, spec.target_abs_tol, max_ref);
    if (!accepted(r, spec) && std::abs(r.value) > 1.0) {
        r = gaps_pass(f, iv, std::max(spec.target_abs_tol / std::abs(r.value), kEps), max_ref);
    }
    r.converged = accepted(r, spec);
    return r;
}

SampledFunction SampledFunction::sample(const std::function<double(double)>& f, double z0, double step,
                                        Eigen::Index n) {
    SampledFunction out{z0, step, Eigen::VectorXd(n)};
    for (Eigen::Index i = 0; i < n; ++i) out.values[i] = f(out.z(i));
    return out;
}

double discrete_norm(const SampledFunction& f) { return std::sqrt(f.values.squaredNorm() * f.step); }

SampledFunction unit_normalized(SampledFunction f) {
    const double n = discrete_norm(f);
    if (!(n > 0.0)) throw std::domain_error("unit_normalized: zero function");
    f.values /= n;
    return f;
}

int count_sign_changes(const SampledFunction& f, double floor) {
    const double cut = floor * f.values.cwiseAbs().maxCoeff();
    int changes = 0;
    int last = 0;
    for (Eigen::Index i = 0; i < f.size(); ++i) {
        const double v = f.values[i];
        if (std::abs(v) <= cut) continue;
        const int s = v > 0 ? 1 : -1;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

Eigen::Index TridiagonalOperator::count_below(double x) const {
    const Eigen::Index n = dimension();
    Eigen::Index count = 0;
    double q = 1.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        const double e2 = i == 0 ? 0.0 : offdiag[i - 1] * offdiag[i - 1];
        q = diag[i] - x - (i == 0 ? 0.0 : e2 / q);
        if (q == 0.0) q = -kEps * (std::abs(diag[i]) + std::abs(x) + 1.0);
        if (q < 0.0) ++count;
    }
    return count;
}

std::pair<double, double> TridiagonalOperator::gershgorin() const {
    const Eigen::Index n = dimension();
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (Eigen::Index i = 0; i < n; ++i) {
        double r = 0.0;
        if (i > 0) r += std::abs(offdiag[i - 1]);
        if (i + 1 < n) r += std::abs(offdiag[i]);
        lo = std::min(lo, diag[i] - r);
        hi = std::max(hi, diag[i] + r);
    }
    return {lo, hi};
}

TridiagonalOperator fdm_hamiltonian(const std::function<double(double)>& v, Eigen::Index n_interior, double zmin,
                                    double zmax) {
    if (n_interior < 16) throw std::invalid_argument("fdm_hamiltonian: need at least 16 interior points");
    if (!(zmax > zmin)) throw std::invalid_argument("fdm_hamiltonian: empty domain");
    const double h = (zmax - zmin) / static_cast<double>(n_interior + 1);
    TridiagonalOperator t;
    t.step = h;
    t.z0 = zmin + h;
    t.diag.resize(n_interior);
    t.offdiag = Eigen::VectorXd::Constant(n_interior - 1, -1.0 / (h * h));
    for (Eigen::Index i = 0; i < n_interior; ++i) {
        const double z = zmin + static_cast<double>(i + 1) * h;
        const double vz = v(z);
        if (!std::isfinite(vz)) throw std::domain_error("fdm_hamiltonian: potential is not finite at z = " + std::to_string(z));
        t.diag[i] = 2.0 / (h * h) + vz;
    }
    return t;
}

std::vector<double> eigenvalues_sturm(const TridiagonalOperator& t, Eigen::Index k, double rel_tol) {
    if (k > t.dimension()) throw std::invalid_argument("eigenvalues_sturm: k exceeds the dimension");
    const auto [glo, ghi] = t.gershgorin();
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(k));
    for (Eigen::Index j = 0; j < k; ++j) {
        // invariant: count_below(lo) <= j < count_below(hi)
        const double floor_lo = glo - 1.0 - std::abs(glo) * 1e-12;
        double lo = out.empty() ? floor_lo : out.back();
        double hi = ghi + 1.0 + std::abs(ghi) * 1e-12;
        if (t.count_below(lo) > j) lo = floor_lo;
        while (true) {
            const double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi) break;
            if (hi - lo <= rel_tol * std::max({1.0, std::abs(lo), std::abs(hi)})) break;
            if (t.count_below(mid) > j) {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        out.push_back(0.5 * (lo + hi));
    }
    return out;
}

namespace {

// LU with partial pivoting of a tridiagonal matrix (dgttrf layout).
struct TridiagonalLu {
    Eigen::VectorXd dl, d, du, du2;
    std::vector<char> swapped;

    TridiagonalLu(const TridiagonalOperator& t, double shift) {
        const Eigen::Index n = t.dimension();
        d = t.diag.array() - shift;
        dl = t.offdiag;
        du = t.offdiag;
        du2 = Eigen::VectorXd::Zero(std::max<Eigen::Index>(n - 2, 0));
        swapped.assign(static_cast<std::size_t>(n), 0);
        const double tiny = kEps * std::max(1.0, t.diag.cwiseAbs().maxCoeff());
        for (Eigen::Index i = 0; i + 1 < n; ++i) {
            if (std::abs(d[i]) >= std::abs(dl[i])) {
                if (d[i] == 0.0) d[i] = tiny;
                const double f = dl[i] / d[i];
                dl[i] = f;
                d[i + 1] -= f * du[i];
            } else {
                const double f = d[i] / dl[i];
                d[i] = dl[i];
                dl[i] = f;
                const double tmp = du[i];
                du[i] = d[i + 1];
                d[i + 1] = tmp - f * d[i + 1];
                if (i + 2 < n) {
                    du2[i] = du[i + 1];
                    du[i + 1] = -f * du[i + 1];
                }
                swapped[static_cast<std::size_t>(i)] = 1;
            }
        }
        if (n > 0 && d[n - 1] == 0.0) d[n - 1] = tiny;
    }

    void solve(Eigen::VectorXd& b) const {
        const Eigen::Index n = d.size();
        for (Eigen::Index i = 0; i + 1 < n; ++i) {
            if (swapped[static_cast<std::size_t>(i)]) {
                const double tmp = b[i];
                b[i] = b[i + 1];
                b[i + 1] = tmp - dl[i] * b[i];
            } else {
                b[i + 1] -= dl[i] * b[i];
            }
        }
        for (Eigen::Index i = n; i-- > 0;) {
            double v = b[i];
            if (i + 1 < n) v -= du[i] * b[i + 1];
            if (i + 2 < n) v -= du2[i] * b[i + 2];
            b[i] = v / d[i];
        }
    }
};

void fix_sign(Eigen::VectorXd& x) {
    const double cut = 1e-6 * x.cwiseAbs().maxCoeff();
    const Eigen::Index n = x.size();
    for (Eigen::Index i = 0; i < n; ++i) {
        if (std::abs(x[i]) <= cut) continue;
        const double prev = i > 0 ? std::abs(x[i - 1]) : 0.0;
        const double next = i + 1 < n ? std::abs(x[i + 1]) : 0.0;
        if (std::abs(x[i]) >= prev && std::abs(x[i]) >= next) {
            if (x[i] < 0.0) x = -x;
            return;
        }
    }
}

}  // namespace

SampledFunction eigenvector_inverse_iteration(const TridiagonalOperator& t, double lambda, int max_steps) {
    const Eigen::Index n = t.dimension();
    const TridiagonalLu lu(t, lambda);
    Eigen::VectorXd x = Eigen::VectorXd::Ones(n);
    x /= x.norm();
    for (int step = 0; step < max_steps; ++step) {
        Eigen::VectorXd y = x;
        lu.solve(y);
        y /= y.norm();
        if (y.dot(x) < 0.0) y = -y;
        const double change = (y - x).cwiseAbs().maxCoeff();
        x = std::move(y);
        if (change < 1e-10) {
            fix_sign(x);
            x /= std::sqrt(t.step);
            return {t.z0, t.step, std::move(x)};
        }
    }
    throw StagnationError("eigenvector_inverse_iteration: no convergence after " + std::to_string(max_steps) +
                          " steps");
}

}  // namespace rm
