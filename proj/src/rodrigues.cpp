#include "rosenmorse/rodrigues.hpp"

#include <cmath>
#include <numbers>

namespace rm {

namespace {

using PolyQ = Polynomial<Rational>;
using RatFnQ = RationalFunction<Rational>;

constexpr double kInf = std::numeric_limits<double>::infinity();

const PolyQ& one_minus_x2() {
    static const PolyQ p{Rational(1), Rational(0), Rational(-1)};
    return p;
}

WeightSpec<Rational> checked(WeightSpec<Rational> spec) {
    if (!spec.is_closed()) {
        throw std::logic_error("preset '" + spec.label + "': w'/w denominator does not divide s");
    }
    return spec;
}

}  // namespace

WeightSpec<double> to_float(const WeightSpec<Rational>& spec) {
    return WeightSpec<double>(poly_to_float(spec.s),
                              RationalFunction<double>(poly_to_float(spec.logw.num()), poly_to_float(spec.logw.den())),
                              spec.domain, spec.label, spec.weight, spec.gap_weight);
}

WeightSpec<Rational> hermite_weight() {
    return checked({PolyQ::constant(1), RatFnQ(PolyQ{Rational(0), Rational(-2)}), {-kInf, kInf}, "hermite",
                    [](double x) { return std::exp(-x * x); }});
}

WeightSpec<Rational> laguerre_weight(const Rational& nu) {
    if (nu <= Rational(-1)) throw std::invalid_argument("laguerre: requires nu > -1");
    const double nud = nu.to_double();
    // w'/w = nu/x - 1 = (nu - x)/x
    return checked({PolyQ::x(), RatFnQ(PolyQ{nu, Rational(-1)}, PolyQ::x()), {0.0, kInf},
                    "laguerre(" + nu.str() + ")",
                    [nud](double x) { return std::pow(x, nud) * std::exp(-x); }});
}

WeightSpec<Rational> jacobi_weight(const Rational& nu, const Rational& mu) {
    if (nu <= Rational(-1) || mu <= Rational(-1)) throw std::invalid_argument("jacobi: requires nu, mu > -1");
    const double nud = nu.to_double();
    const double mud = mu.to_double();
    // w'/w = -nu/(1-x) + mu/(1+x) = (-nu(1+x) + mu(1-x)) / (1-x^2)
    PolyQ num{mu - nu, -(nu + mu)};
    return checked({one_minus_x2(), RatFnQ(std::move(num), one_minus_x2()), {-1.0, 1.0},
                    "jacobi(" + nu.str() + "," + mu.str() + ")",
                    [nud, mud](double x) { return std::pow(1.0 - x, nud) * std::pow(1.0 + x, mud); },
                    [nud, mud](double lo, double hi) { return std::pow(hi, nud) * std::pow(lo, mud); }});
}

WeightSpec<Rational> gegenbauer_weight(const Rational& lambda) {
    if (lambda <= Rational(-1, 2)) throw std::invalid_argument("gegenbauer: requires lambda > -1/2");
    const Rational e = lambda - Rational(1, 2);
    const double ed = e.to_double();
    // w'/w = -2 (lambda - 1/2) x / (1-x^2)
    return checked({one_minus_x2(), RatFnQ(PolyQ{Rational(0), Rational(-2) * e}, one_minus_x2()), {-1.0, 1.0},
                    "gegenbauer(" + lambda.str() + ")",
                    [ed](double x) { return std::pow((1.0 - x) * (1.0 + x), ed); },
                    [ed](double lo, double hi) { return std::pow(lo * hi, ed); }});
}

WeightSpec<Rational> legendre_weight() {
    return checked({one_minus_x2(), RatFnQ(PolyQ{}), {-1.0, 1.0}, "legendre", [](double) { return 1.0; },
                    [](double, double) { return 1.0; }});
}

WeightSpec<Rational> chebyshev1_weight() {
    return checked({one_minus_x2(), RatFnQ(PolyQ{Rational(0), Rational(1)}, one_minus_x2()), {-1.0, 1.0},
                    "chebyshev1", [](double x) { return 1.0 / std::sqrt((1.0 - x) * (1.0 + x)); },
                    [](double lo, double hi) { return 1.0 / std::sqrt(lo * hi); }});
}

WeightSpec<Rational> chebyshev2_weight() {
    return checked({one_minus_x2(), RatFnQ(PolyQ{Rational(0), Rational(-1)}, one_minus_x2()), {-1.0, 1.0},
                    "chebyshev2", [](double x) { return std::sqrt((1.0 - x) * (1.0 + x)); },
                    [](double lo, double hi) { return std::sqrt(lo * hi); }});
}

template <Scalar S>
WeightSpec<S> rosen_morse_weight(const S& a, const S& b, unsigned m) {
    if (!(a > S(-1))) throw std::invalid_argument("rosen_morse_weight: requires a > -1");
    const S mu = S(static_cast<long>(m) + 1) + a;
    const S alpha = S(2) * b / mu;
    const Polynomial<S> s{S(1), S(0), S(1)};
    // d/dx log w = (-2 mu x + alpha) / (1 + x^2), using d(arccot x)/dx = -1/(1+x^2)
    RationalFunction<S> logw(Polynomial<S>{alpha, S(-2) * mu}, s);
    const double mud = to_double(mu);
    const double alphad = to_double(alpha);
    auto weight = [mud, alphad](double x) {
        const double arccot = std::numbers::pi / 2.0 - std::atan(x);
        return std::pow(1.0 + x * x, -mud) * std::exp(-alphad * arccot);
    };
    WeightSpec<S> spec(s, std::move(logw), {-kInf, kInf}, "rosen-morse(m=" + std::to_string(m) + ")",
                       std::move(weight));
    if (!spec.is_closed()) throw std::logic_error("rosen_morse_weight: recursion does not close");
    return spec;
}

template WeightSpec<Rational> rosen_morse_weight(const Rational&, const Rational&, unsigned);
template WeightSpec<double> rosen_morse_weight(const double&, const double&, unsigned);

std::vector<WeightSpec<Rational>> table1_presets(const PresetParams& params) {
    std::vector<WeightSpec<Rational>> out;
    out.push_back(hermite_weight());
    out.push_back(laguerre_weight(params.laguerre_nu));
    out.push_back(jacobi_weight(params.jacobi_nu, params.jacobi_mu));
    out.push_back(gegenbauer_weight(params.gegenbauer_lambda));
    out.push_back(legendre_weight());
    out.push_back(chebyshev1_weight());
    out.push_back(chebyshev2_weight());
    out.push_back(rosen_morse_weight(params.rm_a, params.rm_b, params.rm_m));
    return out;
}

}  // namespace rm
