#pragma once

// Independent numerical oracles: adaptive quadrature and a finite-difference
// eigensolver for -d^2/dz^2 + v(z) with Dirichlet ends.

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>

#include "rosenmorse/rodrigues.hpp"

namespace rm {

enum class QuadratureScheme { double_exponential, gauss_legendre };

struct QuadratureSpec {
    QuadratureScheme scheme = QuadratureScheme::double_exponential;
    double target_abs_tol = 1e-10;
    /// Also accept error <= target_rel_tol * |value| (0 disables).
    double target_rel_tol = 0.0;
    int max_refinement = 15;
};

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;
    bool converged = false;
};

/// Integrates f over iv. Infinite endpoints are handled by the
/// double-exponential family only.
QuadratureResult integrate(const std::function<double(double)>& f, Interval iv, const QuadratureSpec& spec = {});

/// Finite intervals, tanh-sinh only. f(x, x - lo, hi - x) gets both endpoint
/// distances without cancellation, so factors like (1-x)^(-1/2) keep full
/// precision next to the ends.
QuadratureResult integrate_gaps(const std::function<double(double, double, double)>& f, Interval iv,
                                const QuadratureSpec& spec = {});

/// Uniformly sampled function: values[i] = f(z0 + i*step).
struct SampledFunction {
    double z0 = 0.0;
    double step = 0.0;
    Eigen::VectorXd values;

    [[nodiscard]] Eigen::Index size() const { return values.size(); }
    [[nodiscard]] double z(Eigen::Index i) const { return z0 + static_cast<double>(i) * step; }

    static SampledFunction sample(const std::function<double(double)>& f, double z0, double step, Eigen::Index n);
};

/// Discrete L2 norm (weight = step).
[[nodiscard]] double discrete_norm(const SampledFunction& f);
[[nodiscard]] SampledFunction unit_normalized(SampledFunction f);
/// Number of strict sign changes, ignoring samples with |f| <= floor * max|f|.
[[nodiscard]] int count_sign_changes(const SampledFunction& f, double floor = 1e-10);

/// Symmetric tridiagonal matrix of the three-point Dirichlet Laplacian plus
/// potential: diag[i] = 2/h^2 + v(z_i), offdiag[i] = -1/h^2.
struct TridiagonalOperator {
    Eigen::VectorXd diag;
    Eigen::VectorXd offdiag;
    double step = 0.0;
    double z0 = 0.0;

    [[nodiscard]] Eigen::Index dimension() const { return diag.size(); }
    /// Number of eigenvalues strictly below x (Sturm sequence count).
    [[nodiscard]] Eigen::Index count_below(double x) const;
    /// Gershgorin enclosure of the spectrum.
    [[nodiscard]] std::pair<double, double> gershgorin() const;
};

/// N interior points on (zmin, zmax), h = (zmax - zmin)/(N + 1).
TridiagonalOperator fdm_hamiltonian(const std::function<double(double)>& v, Eigen::Index n_interior, double zmin,
                                    double zmax);

/// k smallest eigenvalues by Sturm count + bisection, each to
/// rel_tol * max(1, |lambda|).
std::vector<double> eigenvalues_sturm(const TridiagonalOperator& t, Eigen::Index k, double rel_tol = 1e-13);

class StagnationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Eigenvector for an eigenvalue estimate, normalized so sum(x^2) h = 1 and
/// the first extremum is positive. Samples are the interior grid points.
SampledFunction eigenvector_inverse_iteration(const TridiagonalOperator& t, double lambda, int max_steps = 50);

}  // namespace rm
