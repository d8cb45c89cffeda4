#include "rosenmorse/susy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace rm {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMaxStep = 1e-2;

void check_grid(const SampledFunction& f, Eigen::Index min_points) {
    if (!(f.step > 0.0) || f.step > kMaxStep) throw std::invalid_argument("grid step must lie in (0, 1e-2]");
    if (f.size() < min_points) throw std::invalid_argument("grid has too few points for the stencil");
}

// Unit-normalized raw R_n sampled on the safe grid.
SampledFunction sampled_level(double a, double b, unsigned n, double step) {
    const TrmParams<double> p(a, b);
    const auto c = trm_polynomial(p, n);
    return unit_normalized(sample_safe_grid([&](double z) { return trm_wavefunction_raw(a, b, n, c, z); }, step));
}

}  // namespace

double superpotential_numeric(double a, double b, double z, double step) {
    if (!(z - step > 0.0 && z + step < kPi)) throw std::domain_error("superpotential_numeric: stencil leaves (0, pi)");
    const Polynomial<double> one = Polynomial<double>::constant(1.0);
    const double hi = std::log(std::abs(trm_wavefunction_raw(a, b, 1, one, z + step)));
    const double lo = std::log(std::abs(trm_wavefunction_raw(a, b, 1, one, z - step)));
    return (hi - lo) / (2.0 * step);
}

SampledFunction apply_ladder(LadderSign sign, const Superpotential<double>& u, const SampledFunction& f) {
    check_grid(f, 7);
    const double h = f.step;
    const double dir = sign == LadderSign::plus ? 1.0 : -1.0;
    SampledFunction out{f.z(3), h, Eigen::VectorXd(f.size() - 6)};
    const auto& v = f.values;
    for (Eigen::Index i = 3; i + 3 < f.size(); ++i) {
        const double d = (45.0 * (v[i + 1] - v[i - 1]) - 9.0 * (v[i + 2] - v[i - 2]) + (v[i + 3] - v[i - 3])) /
                         (60.0 * h);
        out.values[i - 3] = dir * d + u(f.z(i)) * v[i];
    }
    return out;
}

SampledFunction apply_hamiltonian(const std::function<double(double)>& pot, const SampledFunction& f) {
    check_grid(f, 7);
    const double h = f.step;
    SampledFunction out{f.z(3), h, Eigen::VectorXd(f.size() - 6)};
    const auto& v = f.values;
    for (Eigen::Index i = 3; i + 3 < f.size(); ++i) {
        const double d2 = (2.0 * (v[i + 3] + v[i - 3]) - 27.0 * (v[i + 2] + v[i - 2]) +
                           270.0 * (v[i + 1] + v[i - 1]) - 490.0 * v[i]) /
                          (180.0 * h * h);
        out.values[i - 3] = -d2 + pot(f.z(i)) * v[i];
    }
    return out;
}

PartnerPair partner_pair(double a, double b) {
    if (!(a > -1.0)) throw std::invalid_argument("partner_pair: requires a > -1");
    return {[a, b](double z) { return trm_potential(a, b, z); },
            [a, b](double z) { return trm_potential(a + 1.0, b, z); }};
}

SampledFunction sample_safe_grid(const std::function<double(double)>& f, double step) {
    if (!(step > 0.0) || step > kMaxStep) throw std::invalid_argument("safe grid step must lie in (0, 1e-2]");
    const double delta = 10.0 * step;
    const auto n = static_cast<Eigen::Index>(std::floor((kPi - 2.0 * delta) / step)) + 1;
    return SampledFunction::sample(f, delta, step, n);
}

SampledFunction restrict_to(const SampledFunction& g, const SampledFunction& like) {
    const double offset = (like.z0 - g.z0) / g.step;
    const auto first = static_cast<Eigen::Index>(std::llround(offset));
    if (std::abs(offset - static_cast<double>(first)) > 1e-6 || std::abs(like.step - g.step) > 1e-15 * g.step ||
        first < 0 || first + like.size() > g.size()) {
        throw std::invalid_argument("restrict_to: grids are not aligned");
    }
    return {like.z0, like.step, g.values.segment(first, like.size())};
}

double ground_state_annihilation_residual(double a, double b, double step) {
    const auto u = superpotential_from_gst(TrmParams<double>(a, b));
    const auto r1 = sampled_level(a, b, 1, step);
    return apply_ladder(LadderSign::minus, u, r1).values.cwiseAbs().maxCoeff();
}

double partner_identity_residual(double a, double b, unsigned n, double step) {
    if (n < 2) throw std::invalid_argument("partner_identity_residual: n must be >= 2");
    const auto u = superpotential_from_gst(TrmParams<double>(a, b));
    const auto lowered = unit_normalized(apply_ladder(LadderSign::minus, u, sampled_level(a, b, n, step)));
    const TrmParams<double> shifted(a + 1.0, b);
    const auto c = trm_polynomial(shifted, n - 1);
    const auto partner = unit_normalized(SampledFunction::sample(
        [&](double z) { return trm_wavefunction_raw(a + 1.0, b, n - 1, c, z); }, lowered.z0, lowered.step,
        lowered.size()));
    const double sign = lowered.values.dot(partner.values) < 0.0 ? -1.0 : 1.0;
    return (lowered.values - sign * partner.values).cwiseAbs().maxCoeff();
}

double factorization_residual(double a, double b, unsigned n, double step) {
    const TrmParams<double> p(a, b);
    const auto u = superpotential_from_gst(p);
    const auto rn = sampled_level(a, b, n, step);
    const auto raised = apply_ladder(LadderSign::plus, u, apply_ladder(LadderSign::minus, u, rn));
    const double gap = trm_level(p, n).epsilon - trm_level(p, 1).epsilon;
    const auto ref = restrict_to(rn, raised);
    return (raised.values - gap * ref.values).cwiseAbs().maxCoeff();
}

RiccatiResiduals riccati_residuals(double a, double b, double step) {
    const TrmParams<double> p(a, b);
    const auto u = superpotential_from_gst(p);
    const double eps1 = trm_level(p, 1).epsilon;
    const auto pair = partner_pair(a, b);
    RiccatiResiduals r;
    const auto grid = sample_safe_grid([](double) { return 0.0; }, step);
    for (Eigen::Index i = 0; i < grid.size(); ++i) {
        const double z = grid.z(i);
        const double uz = u(z);
        const double du = u.derivative(z);
        r.hamiltonian = std::max(r.hamiltonian, std::abs(uz * uz + du + eps1 - pair.h_potential(z)));
        r.partner = std::max(r.partner, std::abs(uz * uz - du + eps1 - pair.h_tilde_potential(z)));
        r.literal = std::max(r.literal, std::abs(uz * uz - du + eps1 - pair.h_potential(z)));
    }
    return r;
}

}  // namespace rm
