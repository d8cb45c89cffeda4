#pragma once

// Generic Rodrigues-formula engine.
//
// A family is described by s(x) (degree <= 2) and the logarithmic weight
// derivative w'(x)/w(x). The m-th member is (1/w) d^m/dx^m (w s^m), produced
// without ever touching w itself by the recursion
//
//   d^j/dx^j (w s^m) = w s^(m-j) T_j,
//   T_{j+1} = (w'/w * s) T_j + (m - j) s' T_j + s T_j',   T_0 = 1,
//
// which stays inside the polynomial ring whenever (w'/w) * s is a polynomial.

#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rosenmorse/polynomial.hpp"

namespace rm {

struct Interval {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
};

template <Scalar S>
struct WeightSpec {
    Polynomial<S> s;
    RationalFunction<S> logw;  // w'(x)/w(x)
    Interval domain;
    std::string label;
    /// Pointwise weight for quadrature; absent when only the algebra is needed.
    std::function<double(double)> weight;
    /// Same weight as a function of (x - lo, hi - x), for finite domains with
    /// endpoint singularities; see integrate_gaps.
    std::function<double(double, double)> gap_weight;

    WeightSpec(Polynomial<S> s_, RationalFunction<S> logw_, Interval domain_, std::string label_,
               std::function<double(double)> weight_ = {}, std::function<double(double, double)> gap_weight_ = {})
        : s(std::move(s_)), logw(std::move(logw_)), domain(domain_), label(std::move(label_)),
          weight(std::move(weight_)), gap_weight(std::move(gap_weight_)) {
        if (s.degree() > 2) throw std::invalid_argument("WeightSpec '" + label + "': s must have degree <= 2");
        if (s.is_zero()) throw std::invalid_argument("WeightSpec '" + label + "': s must be nonzero");
    }

    /// (w'/w) * s as a polynomial, if the derivative recursion closes.
    [[nodiscard]] std::optional<Polynomial<S>> drift() const { return logw.times_polynomial(s); }
    [[nodiscard]] bool is_closed() const { return drift().has_value(); }
};

template <Scalar S>
struct RodriguesResult {
    Polynomial<S> poly;
    unsigned m = 0;
    S lambda{0};
};

namespace detail {

template <Scalar S>
Polynomial<S> require_drift(const WeightSpec<S>& spec) {
    auto q = spec.drift();
    if (!q) {
        throw std::domain_error("rodrigues: (w'/w)*s is not a polynomial for weight '" + spec.label + "'");
    }
    return *q;
}

}  // namespace detail

/// lambda_m = -m (C_1' + (m-1)/2 s''), with C_1 = (w'/w) s + s' and K_1 = 1.
template <Scalar S>
[[nodiscard]] S rodrigues_eigenvalue(const WeightSpec<S>& spec, unsigned m) {
    const auto first = detail::require_drift(spec) + poly_diff(spec.s);
    if (first.degree() > 1) {
        throw std::domain_error("rodrigues: first member is not of degree <= 1 for weight '" + spec.label + "'");
    }
    const S c1_slope = first.coeff(1);
    const S s_curv = spec.s.coeff(2) * S(2);
    const S mm(static_cast<long>(m));
    return -mm * (c1_slope + (mm - S(1)) / S(2) * s_curv);
}

/// Unnormalized m-th member and its eigenvalue.
template <Scalar S>
[[nodiscard]] RodriguesResult<S> rodrigues_generate(const WeightSpec<S>& spec, unsigned m) {
    const Polynomial<S> q = detail::require_drift(spec);
    const Polynomial<S> ds = poly_diff(spec.s);
    const auto& qc = q.coeffs();
    const auto& sc = spec.s.coeffs();
    const auto& dsc = ds.coeffs();

    Polynomial<S> t = Polynomial<S>::constant(S(1));
    for (unsigned j = 0; j < m; ++j) {
        const S power(static_cast<long>(m - j));
        const Polynomial<S> dt = poly_diff(t);
        const auto& tc = t.coeffs();
        const auto& dtc = dt.coeffs();
        const std::size_t width = tc.size() + 2;
        std::vector<Accumulator<S>> acc(width);
        for (std::size_t i = 0; i < tc.size(); ++i) {
            for (std::size_t k = 0; k < qc.size(); ++k) acc[i + k].add(qc[k] * tc[i]);
            for (std::size_t k = 0; k < dsc.size(); ++k) acc[i + k].add(power * dsc[k] * tc[i]);
        }
        for (std::size_t i = 0; i < dtc.size(); ++i) {
            for (std::size_t k = 0; k < sc.size(); ++k) acc[i + k].add(sc[k] * dtc[i]);
        }
        std::vector<S> next;
        next.reserve(width);
        for (const auto& a : acc) next.push_back(a.value());
        t = Polynomial<S>(std::move(next));
    }
    return {std::move(t), m, rodrigues_eigenvalue(spec, m)};
}

/// s C'' + ((w'/w) s + s') C' + lambda C; zero for a valid result.
template <Scalar S>
[[nodiscard]] Polynomial<S> sturm_liouville_residual(const WeightSpec<S>& spec, const RodriguesResult<S>& r) {
    const auto first = detail::require_drift(spec) + poly_diff(spec.s);
    const auto d1 = poly_diff(r.poly);
    const auto d2 = poly_diff(d1);
    return spec.s * d2 + first * d1 + r.poly * r.lambda;
}

/// Nearest-double copy of an exact weight specification.
[[nodiscard]] WeightSpec<double> to_float(const WeightSpec<Rational>& spec);

// Classical presets plus the tRM family. Parameter constraints are enforced on construction.
[[nodiscard]] WeightSpec<Rational> hermite_weight();
[[nodiscard]] WeightSpec<Rational> laguerre_weight(const Rational& nu);
[[nodiscard]] WeightSpec<Rational> jacobi_weight(const Rational& nu, const Rational& mu);
[[nodiscard]] WeightSpec<Rational> gegenbauer_weight(const Rational& lambda);
[[nodiscard]] WeightSpec<Rational> legendre_weight();
[[nodiscard]] WeightSpec<Rational> chebyshev1_weight();
[[nodiscard]] WeightSpec<Rational> chebyshev2_weight();

/// w = (1+x^2)^(-mu) exp(-2 (b/mu) arccot x), s = 1 + x^2 with mu = m+1+a.
template <Scalar S>
[[nodiscard]] WeightSpec<S> rosen_morse_weight(const S& a, const S& b, unsigned m);

struct PresetParams {
    Rational laguerre_nu{1, 2};
    Rational jacobi_nu{1, 2};
    Rational jacobi_mu{-1, 3};
    Rational gegenbauer_lambda{3, 4};
    Rational rm_a{0};
    Rational rm_b{1};
    unsigned rm_m = 1;
};

/// The seven classical families followed by the Rosen-Morse family.
[[nodiscard]] std::vector<WeightSpec<Rational>> table1_presets(const PresetParams& params = {});

}  // namespace rm
