#pragma once

// Bound states of -R'' + v R = eps R with the trigonometric Rosen-Morse
// potential v(z) = -2b cot z + a(a+1) csc^2 z on (0, pi).
//
// Level n >= 1:
//   beta_n  = 1 - (n + a),  alpha_n = 2b/(n + a),
//   eps_n   = (n + a)^2 - b^2/(n + a)^2,
//   R_n(z)  = exp(-alpha_n z/2) sin^(n+a) z C_n(cot z) / K_n,
// with C_n the (n-1)-th Rodrigues member of the n-dependent weight
// (1+x^2)^-(n+a) exp(-alpha_n arccot x), s = 1 + x^2.

#include <optional>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>

#include "rosenmorse/numerics.hpp"
#include "rosenmorse/polynomial.hpp"
#include "rosenmorse/rodrigues.hpp"

namespace rm {

template <Scalar S>
struct TrmParams {
    S a;
    S b;

    TrmParams(S a_, S b_) : a(std::move(a_)), b(std::move(b_)) {
        if (!(a > S(-1))) throw std::invalid_argument("TrmParams: requires a > -1");
    }
};

template <Scalar S>
struct TrmLevel {
    unsigned n = 1;
    S beta;
    S alpha;
    S epsilon;
};

template <Scalar S>
struct TrmSolution {
    TrmLevel<S> level;
    TrmParams<S> params;
    Polynomial<S> poly;         // unnormalized C_n (raw Rodrigues output)
    std::optional<double> knorm;  // R_n is divided by this when present
};

template <Scalar S>
[[nodiscard]] TrmLevel<S> trm_level(const TrmParams<S>& p, unsigned n) {
    if (n < 1) throw std::invalid_argument("trm_level: n must be >= 1");
    const S shifted = S(static_cast<long>(n)) + p.a;
    if (is_zero(shifted)) throw std::domain_error("trm_level: n + a = 0");
    const S sq = shifted * shifted;
    return {n, S(1) - shifted, S(2) * p.b / shifted, sq - p.b * p.b / sq};
}

template <Scalar S>
[[nodiscard]] std::vector<TrmLevel<S>> trm_spectrum(const TrmParams<S>& p, unsigned n_max) {
    if (n_max < 1) throw std::invalid_argument("trm_spectrum: n_max must be >= 1");
    std::vector<TrmLevel<S>> out;
    out.reserve(n_max);
    for (unsigned n = 1; n <= n_max; ++n) out.push_back(trm_level(p, n));
    return out;
}

/// Unnormalized C_n, degree n - 1.
template <Scalar S>
[[nodiscard]] Polynomial<S> trm_polynomial(const TrmParams<S>& p, unsigned n) {
    if (n < 1) throw std::invalid_argument("trm_polynomial: n must be >= 1");
    return rodrigues_generate(rosen_morse_weight(p.a, p.b, n - 1), n - 1).poly;
}

/// (1+x^2) C'' + 2(alpha/2 + beta x) C' + (-beta(1-beta) - a(a+1)) C.
template <Scalar S>
[[nodiscard]] Polynomial<S> trm_ode_residual(const TrmParams<S>& p, const TrmLevel<S>& lv, const Polynomial<S>& c) {
    const Polynomial<S> s{S(1), S(0), S(1)};
    const Polynomial<S> drift{lv.alpha, S(2) * lv.beta};
    const S constant = -lv.beta * (S(1) - lv.beta) - p.a * (p.a + S(1));
    const auto d1 = poly_diff(c);
    return s * poly_diff(d1) + drift * d1 + c * constant;
}

/// v(z) = -2b cot z + a(a+1) csc^2 z, 0 < z < pi.
[[nodiscard]] double trm_potential(double a, double b, double z);

template <Scalar S>
[[nodiscard]] double trm_potential(const TrmParams<S>& p, double z) {
    return trm_potential(to_double(p.a), to_double(p.b), z);
}

/// Closed-form K_n for a = 0. Throws for b = 0.
[[nodiscard]] double trm_knorm(double b, unsigned n);
/// lim_{b->0} trm_knorm(b, n) = n! sqrt(pi / (2 n^2)).
[[nodiscard]] double trm_knorm_b0_limit(unsigned n);

/// R_n(z) for raw coefficients (no normalization).
[[nodiscard]] double trm_wavefunction_raw(double a, double b, unsigned n, const Polynomial<double>& c, double z);

template <Scalar S>
[[nodiscard]] double trm_wavefunction(const TrmSolution<S>& sol, double z) {
    Polynomial<double> c;
    if constexpr (is_exact_v<S>) {
        c = poly_to_float(sol.poly);
    } else {
        c = sol.poly;
    }
    const double raw = trm_wavefunction_raw(to_double(sol.params.a), to_double(sol.params.b), sol.level.n, c, z);
    return sol.knorm ? raw / *sol.knorm : raw;
}

/// sqrt(int_0^pi R_raw^2 dz) by quadrature.
[[nodiscard]] double trm_quadrature_norm(double a, double b, unsigned n, const Polynomial<double>& c,
                                         const QuadratureSpec& spec = {});

enum class Normalization { none, closed_form_or_quadrature, quadrature };

/// Builds level n. With closed_form_or_quadrature, a = 0 and b != 0 use the
/// closed-form K_n; everything else is normalized by quadrature.
template <Scalar S>
[[nodiscard]] TrmSolution<S> trm_solution(const TrmParams<S>& p, unsigned n,
                                          Normalization norm = Normalization::closed_form_or_quadrature) {
    TrmSolution<S> sol{trm_level(p, n), p, trm_polynomial(p, n), std::nullopt};
    if (norm == Normalization::none) return sol;
    if (norm == Normalization::closed_form_or_quadrature && is_zero(p.a) && !is_zero(p.b)) {
        sol.knorm = trm_knorm(to_double(p.b), n);
        return sol;
    }
    Polynomial<double> c;
    if constexpr (is_exact_v<S>) {
        c = poly_to_float(sol.poly);
    } else {
        c = sol.poly;
    }
    sol.knorm = trm_quadrature_norm(to_double(p.a), to_double(p.b), n, c);
    return sol;
}

/// Overlaps <R_i, R_j> of unit-normalized R_1..R_nmax by quadrature.
[[nodiscard]] Eigen::MatrixXd trm_gram(double a, double b, unsigned n_max, const QuadratureSpec& spec = {});

/// Interior zeros of R_n located by sampling and bisection.
[[nodiscard]] std::vector<double> trm_nodes(double a, double b, unsigned n, const Polynomial<double>& c,
                                            int samples = 4000);

}  // namespace rm
