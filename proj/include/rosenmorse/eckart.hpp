#pragma once

// Eckart potential v(z) = -2b coth z + a(a+1) csch^2 z on (0, inf), the
// hyperbolic counterpart of the Rosen-Morse well. Same a(a+1) convention
// and level numbering (n >= 1) as trm.hpp:
//   eps_n = -(n+a)^2 - b^2/(n+a)^2,  bound while (n+a)^2 <= b,
//   psi_n = (x-1)^(nu/2) (x+1)^(mu/2) P_{n-1}^(nu,mu)(x),  x = coth z,
//   nu = b/(n+a) - (n+a),  mu = -(b/(n+a) + (n+a)).

#include <string>
#include <vector>

#include "rosenmorse/numerics.hpp"
#include "rosenmorse/scalar.hpp"

namespace rm {

template <Scalar S>
struct EckartParams {
    S a;
    S b;

    EckartParams(S a_, S b_) : a(std::move(a_)), b(std::move(b_)) {
        if (!(b > a * a)) throw std::invalid_argument("EckartParams: requires b > a^2");
    }
};

template <Scalar S>
struct EckartLevel {
    unsigned n = 1;
    S beta;     // b/(n+a)
    S epsilon;
};

/// Levels 1 <= n with (n+a)^2 <= b. Indices with n + a <= 0 carry no
/// normalizable state and are skipped; `skipped` receives a message for each.
template <Scalar S>
[[nodiscard]] std::vector<EckartLevel<S>> eckart_spectrum(const EckartParams<S>& p,
                                                          std::vector<std::string>* skipped = nullptr) {
    std::vector<EckartLevel<S>> out;
    for (unsigned n = 1;; ++n) {
        const S shifted = S(static_cast<long>(n)) + p.a;
        if (!(shifted > S(0))) {
            if (skipped) skipped->push_back("level n=" + std::to_string(n) + " skipped: n + a <= 0");
            continue;
        }
        if (shifted * shifted > p.b) break;
        const S beta = p.b / shifted;
        out.push_back({n, beta, -shifted * shifted - beta * beta});
    }
    return out;
}

/// Degree-n Jacobi polynomial from the terminating hypergeometric sum
///   sum_k (n+nu+mu+1)_k (nu+k+1)_(n-k) / (k! (n-k)!) ((x-1)/2)^k,
/// valid for any real indices.
template <Scalar S>
[[nodiscard]] S jacobi_real(unsigned n, const S& nu, const S& mu, const S& x) {
    const S half_xm1 = (x - S(1)) / S(2);
    Accumulator<S> sum;
    S xpow(1);
    S rising_top(1);  // (n+nu+mu+1)_k
    S k_fact(1);
    for (unsigned k = 0; k <= n; ++k) {
        S rising_low(1);  // (nu+k+1)_(n-k)
        S rest_fact(1);
        for (unsigned j = 0; j < n - k; ++j) {
            rising_low *= nu + S(static_cast<long>(k + j + 1));
            rest_fact *= S(static_cast<long>(j + 1));
        }
        sum.add(rising_top * rising_low / (k_fact * rest_fact) * xpow);
        rising_top *= S(static_cast<long>(n + k + 1)) + nu + mu;
        k_fact *= S(static_cast<long>(k + 1));
        xpow *= half_xm1;
    }
    return sum.value();
}

[[nodiscard]] double eckart_potential(double a, double b, double z);

/// Unnormalized psi_n(z). Throws if n is not a bound level of p.
[[nodiscard]] double eckart_wavefunction(const EckartParams<double>& p, unsigned n, double z);

/// sqrt(int_0^inf psi_n^2 dz) by double-exponential quadrature.
[[nodiscard]] double eckart_norm(const EckartParams<double>& p, unsigned n, const QuadratureSpec& spec = {});

/// Dirichlet truncation length used for the finite-difference oracle.
inline constexpr double kEckartBoxLength = 30.0;

}  // namespace rm
