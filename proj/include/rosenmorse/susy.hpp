#pragma once

// One-step SUSY partner of the Rosen-Morse Hamiltonian.
//
// U(z) = -b/(a+1) + (a+1) cot z, A+- = +-d/dz + U, and with the
// factorization energy eps_1:
//   H  = A+ A- + eps_1 = -d^2 + U^2 + U' + eps_1  (potential v),
//   H~ = A- A+ + eps_1 = -d^2 + U^2 - U' + eps_1  (potential v~ = v at a+1).
// A- annihilates R_1 and maps R_n|(a,b) onto R_{n-1}|(a+1,b).

#include <functional>

#include "rosenmorse/numerics.hpp"
#include "rosenmorse/trm.hpp"

namespace rm {

template <Scalar S>
struct Superpotential {
    TrmParams<S> params;
    S offset;    // -b/(a+1)
    S strength;  // a+1

    [[nodiscard]] double operator()(double z) const {
        return to_double(offset) + to_double(strength) * std::cos(z) / std::sin(z);
    }
    /// dU/dz = -(a+1) csc^2 z.
    [[nodiscard]] double derivative(double z) const {
        const double s = std::sin(z);
        return -to_double(strength) / (s * s);
    }
};

template <Scalar S>
[[nodiscard]] Superpotential<S> superpotential_from_gst(const TrmParams<S>& p) {
    const S strength = p.a + S(1);
    return {p, -p.b / strength, strength};
}

/// (d/dz) ln R_1(z) by central differences on the closed-form ground state.
[[nodiscard]] double superpotential_numeric(double a, double b, double z, double step = 1e-5);

enum class LadderSign { plus, minus };

/// (+-d/dz + U) f with sixth-order central differences. The result lives on
/// the grid with three points dropped at each end.
SampledFunction apply_ladder(LadderSign sign, const Superpotential<double>& u, const SampledFunction& f);

/// (-d^2/dz^2 + v) f with the sixth-order seven-point stencil.
SampledFunction apply_hamiltonian(const std::function<double(double)>& v, const SampledFunction& f);

struct PartnerPair {
    std::function<double(double)> h_potential;
    std::function<double(double)> h_tilde_potential;
};

[[nodiscard]] PartnerPair partner_pair(double a, double b);

/// Grid on [delta, pi - delta] with delta = 10 * step.
[[nodiscard]] SampledFunction sample_safe_grid(const std::function<double(double)>& f, double step);

/// Restrict g to the points of `like` (same step, grids aligned).
[[nodiscard]] SampledFunction restrict_to(const SampledFunction& g, const SampledFunction& like);

/// Max over the safe grid of |A- R_1| with R_1 unit-normalized.
[[nodiscard]] double ground_state_annihilation_residual(double a, double b, double step);

/// Max |unit(A- R_n|(a,b)) - unit(R_{n-1}|(a+1,b))| after sign alignment.
[[nodiscard]] double partner_identity_residual(double a, double b, unsigned n, double step);

/// Max |A+ A- R_n - (eps_n - eps_1) R_n| with R_n unit-normalized.
[[nodiscard]] double factorization_residual(double a, double b, unsigned n, double step);

struct RiccatiResiduals {
    double hamiltonian = 0.0;  // max |U^2 + U' + eps_1 - v|
    double partner = 0.0;      // max |U^2 - U' + eps_1 - v~|
    double literal = 0.0;      // max |U^2 - U' + eps_1 - v| (equals 2(a+1) max csc^2)
};

[[nodiscard]] RiccatiResiduals riccati_residuals(double a, double b, double step);

}  // namespace rm
