#include "rosenmorse/eckart.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace rm {

double eckart_potential(double a, double b, double z) {
    if (!(z > 0.0)) throw std::domain_error("eckart_potential: z must be positive");
    const double sh = std::sinh(z);
    return -2.0 * b / std::tanh(z) + a * (a + 1.0) / (sh * sh);
}

double eckart_wavefunction(const EckartParams<double>& p, unsigned n, double z) {
    if (!(z > 0.0)) throw std::domain_error("eckart_wavefunction: z must be positive");
    const double shifted = static_cast<double>(n) + p.a;
    if (n < 1 || !(shifted > 0.0) || shifted * shifted > p.b) {
        throw std::domain_error("eckart_wavefunction: n=" + std::to_string(n) + " is not a bound level");
    }
    const double beta = p.b / shifted;
    const double nu = beta - shifted;
    const double mu = -(beta + shifted);
    // x - 1 = 2/(e^{2z} - 1) and x + 1 = 2 + (x - 1), kept in log form.
    const double log_em1 = z > 20.0 ? 2.0 * z + std::log1p(-std::exp(-2.0 * z)) : std::log(std::expm1(2.0 * z));
    const double log_xm1 = std::numbers::ln2 - log_em1;
    const double xm1 = std::exp(log_xm1);
    const double log_xp1 = std::log(2.0 + xm1);
    const double x = 1.0 + xm1;
    const double poly = jacobi_real<double>(n - 1, nu, mu, x);
    const double value = std::exp(0.5 * nu * log_xm1 + 0.5 * mu * log_xp1) * poly;
    // x^(n-1) overflows for z -> 0 where psi ~ z^(a+1) has already vanished.
    if (!std::isfinite(value) && z < 1e-6) return 0.0;
    return value;
}

double eckart_norm(const EckartParams<double>& p, unsigned n, const QuadratureSpec& spec) {
    QuadratureSpec rel = spec;
    rel.target_rel_tol = std::max(rel.target_rel_tol, 1e-12);
    const auto r = integrate(
        [&](double z) {
            if (z <= 0.0) return 0.0;
            const double v = eckart_wavefunction(p, n, z);
            return v * v;
        },
        {0.0, std::numeric_limits<double>::infinity()}, rel);
    return std::sqrt(r.value);
}

}  // namespace rm
