#include "doctest.h"

#include "oracles.hpp"
#include "rosenmorse/rodrigues.hpp"

using rm::Polynomial;
using rm::Rational;
using PolyQ = Polynomial<Rational>;

TEST_CASE("legendre m=2 is proportional to 3x^2 - 1") {
    const auto r = rm::rodrigues_generate(rm::legendre_weight(), 2);
    CHECK(r.poly.degree() == 2);
    CHECK(oracle::cross_proportional(r.poly, PolyQ{-1, 0, 3}));
    const auto ref = oracle::legendre(8);
    for (unsigned m = 0; m <= 8; ++m) {
        CAPTURE(m);
        CHECK(oracle::cross_proportional(rm::rodrigues_generate(rm::legendre_weight(), m).poly, ref[m]));
    }
}

TEST_CASE("hermite members follow the recurrence") {
    CHECK(oracle::cross_proportional(rm::rodrigues_generate(rm::hermite_weight(), 1).poly, PolyQ{0, 1}));
    const auto ref = oracle::hermite(8);
    for (unsigned m = 0; m <= 8; ++m) {
        CAPTURE(m);
        CHECK(oracle::cross_proportional(rm::rodrigues_generate(rm::hermite_weight(), m).poly, ref[m]));
    }
}

TEST_CASE("jacobi members follow the recurrence") {
    const Rational nu(1, 2), mu(-1, 3);
    const auto ref = oracle::jacobi(8, nu, mu);
    for (unsigned m = 0; m <= 8; ++m) {
        CAPTURE(m);
        CHECK(oracle::cross_proportional(rm::rodrigues_generate(rm::jacobi_weight(nu, mu), m).poly, ref[m]));
    }
}

TEST_CASE("zeroth member is constant with zero eigenvalue") {
    for (const auto& spec : rm::table1_presets()) {
        CAPTURE(spec.label);
        const auto r = rm::rodrigues_generate(spec, 0);
        CHECK(r.poly.degree() == 0);
        CHECK(r.lambda == Rational(0));
    }
}

TEST_CASE("sturm-liouville residual vanishes for every preset") {
    for (const auto& spec : rm::table1_presets()) {
        for (unsigned m = 0; m <= 8; ++m) {
            CAPTURE(spec.label);
            CAPTURE(m);
            const auto r = rm::rodrigues_generate(spec, m);
            CHECK(rm::sturm_liouville_residual(spec, r).is_zero());
        }
    }
}

TEST_CASE("tRM weight at n=2 gives a zero residual") {
    const auto spec = rm::rosen_morse_weight(Rational(0), Rational(1), 1);
    const auto r = rm::rodrigues_generate(spec, 1);
    CHECK(r.poly.degree() == 1);
    CHECK(rm::sturm_liouville_residual(spec, r).is_zero());
}

TEST_CASE("a corrupted polynomial leaves a nonzero residual") {
    const auto spec = rm::legendre_weight();
    auto r = rm::rodrigues_generate(spec, 2);
    r.poly = PolyQ{0, 0, 3};
    CHECK_FALSE(rm::sturm_liouville_residual(spec, r).is_zero());
}

TEST_CASE("classical degrees equal m") {
    const auto presets = rm::table1_presets();
    for (std::size_t f = 0; f < 7; ++f) {
        for (unsigned m = 0; m <= 8; ++m) {
            CAPTURE(presets[f].label);
            CHECK(rm::rodrigues_generate(presets[f], m).poly.degree() == static_cast<int>(m));
        }
    }
}

TEST_CASE("preset logarithmic derivatives") {
    const auto leg = rm::legendre_weight();
    CHECK(leg.s == PolyQ{1, 0, -1});
    CHECK(leg.logw.num().is_zero());
    CHECK(leg.domain.lo == -1.0);
    CHECK(leg.domain.hi == 1.0);

    const Rational nu(1, 2), mu(-1, 3);
    const auto jac = rm::jacobi_weight(nu, mu);
    CHECK(jac.s == PolyQ{1, 0, -1});
    // Compare w'/w at a few rational points against the hand-differentiated form.
    for (const Rational x : {Rational(0), Rational(1, 3), Rational(-2, 5)}) {
        const Rational expected = (-nu * (Rational(1) + x) + mu * (Rational(1) - x)) / (Rational(1) - x * x);
        CHECK(jac.logw(x) == expected);
    }

    const Rational a(1, 4), b(3);
    const unsigned m = 2;
    const auto trm = rm::rosen_morse_weight(a, b, m);
    const Rational muq = Rational(static_cast<long>(m) + 1) + a;
    CHECK(trm.s == PolyQ{1, 0, 1});
    for (const Rational x : {Rational(0), Rational(2), Rational(-7, 3)}) {
        const Rational expected = (Rational(-2) * muq * x + Rational(2) * b / muq) / (Rational(1) + x * x);
        CHECK(trm.logw(x) == expected);
    }
}

TEST_CASE("parameter constraints are enforced") {
    CHECK_THROWS_AS((void)rm::laguerre_weight(Rational(-1)), std::invalid_argument);
    CHECK_THROWS_AS((void)rm::jacobi_weight(Rational(-2), Rational(0)), std::invalid_argument);
    CHECK_THROWS_AS((void)rm::gegenbauer_weight(Rational(-1, 2)), std::invalid_argument);
    CHECK_THROWS_AS((void)rm::rosen_morse_weight(Rational(-1), Rational(1), 0), std::invalid_argument);
    CHECK_NOTHROW((void)rm::laguerre_weight(Rational(-1, 2)));
}

TEST_CASE("non-closing drift is rejected") {
    // w'/w = 1/x^2 with s = 1: the recursion leaves the polynomial ring.
    const rm::WeightSpec<Rational> bad(PolyQ{1}, rm::RationalFunction<Rational>(PolyQ{1}, PolyQ{0, 0, 1}),
                                       rm::Interval{}, "bad");
    CHECK_FALSE(bad.is_closed());
    CHECK_THROWS_AS((void)rm::rodrigues_generate(bad, 2), std::domain_error);
    CHECK_THROWS_AS(rm::WeightSpec<Rational>(PolyQ{0, 0, 0, 1}, rm::RationalFunction<Rational>(PolyQ{}),
                                             rm::Interval{}, "cubic"),
                    std::invalid_argument);
}

TEST_CASE("float engine agrees with the exact one") {
    const auto exact = rm::rosen_morse_weight(Rational(1, 4), Rational(1), 4);
    const auto flt = rm::rosen_morse_weight(0.25, 1.0, 4);
    const auto pe = rm::rodrigues_generate(exact, 4).poly;
    const auto pf = rm::rodrigues_generate(flt, 4).poly;
    REQUIRE(pf.degree() == pe.degree());
    for (int k = 0; k <= pe.degree(); ++k) {
        const double e = pe.coeff(static_cast<std::size_t>(k)).to_double();
        CHECK(pf.coeff(static_cast<std::size_t>(k)) == doctest::Approx(e).epsilon(1e-12));
    }
}
