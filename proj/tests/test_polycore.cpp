#include <cmath>
#include <random>

#include "doctest.h"

#include "rosenmorse/polynomial.hpp"
#include "rosenmorse/rational.hpp"

using rm::Polynomial;
using rm::Rational;
using PolyQ = Polynomial<Rational>;
using PolyD = Polynomial<double>;

namespace {

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-40, 40);
    std::uniform_int_distribution<long> den(1, 17);
    return Rational(num(rng), den(rng));
}

PolyQ random_poly(std::mt19937_64& rng, int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& v : c) v = random_rational(rng);
    return PolyQ(c);
}

}  // namespace

TEST_CASE("rational arithmetic stays reduced") {
    const Rational r(6, -4);
    CHECK(r.str() == "-3/2");
    CHECK(r.denominator() == 2);
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK((Rational(2, 3) * Rational(3, 2)).is_integer());
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational parsing") {
    CHECK(Rational::parse("1/4") == Rational(1, 4));
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK(Rational::parse("0.25") == Rational(1, 4));
    CHECK(Rational::parse("1.0001") == Rational(10001, 10000));
    CHECK(Rational::parse("2.5e-1") == Rational(1, 4));
    CHECK(Rational::parse("6/8") == Rational(3, 4));
    CHECK_THROWS((void)Rational::parse("abc"));
    CHECK_THROWS((void)Rational::parse("1/0"));
    CHECK_THROWS((void)Rational::parse(""));
}

TEST_CASE("rational to double rounds to nearest") {
    CHECK(Rational(1, 3).to_double() == 1.0 / 3.0);
    CHECK(Rational(2, 3).to_double() == 2.0 / 3.0);
    CHECK(Rational(-1, 10).to_double() == -0.1);
    CHECK(Rational(22, 7).to_double() == 22.0 / 7.0);
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-1e6, 1e6);
    for (int i = 0; i < 200; ++i) {
        const double x = u(rng);
        CHECK(Rational::from_double(x).to_double() == x);
    }
}

TEST_CASE("poly_add") {
    CHECK(poly_add(PolyQ{1, 1}, PolyQ{-1, 1}) == PolyQ{0, 2});
    const PolyQ p{3, 0, 5};
    CHECK(poly_add(p, PolyQ{}) == p);
    CHECK(poly_add(PolyQ{0, 0, 3}, PolyQ{0, 1, 2}) == PolyQ{0, 1, 5});
    CHECK(poly_add(PolyQ{1, 1}, PolyQ{-1, -1}).is_zero());
}

TEST_CASE("poly_mul") {
    CHECK(poly_mul(PolyQ{1, 1}, PolyQ{1, -1}) == PolyQ{1, 0, -1});
    const PolyQ p{Rational(1, 2), 3, -2};
    CHECK(poly_mul(p, PolyQ::constant(1)) == p);
    CHECK(poly_mul(PolyQ{1, 0, 1}, PolyQ{1, 0, 1}) == PolyQ{1, 0, 2, 0, 1});
    CHECK(poly_mul(p, PolyQ{}).is_zero());
}

TEST_CASE("poly_diff") {
    CHECK(poly_diff(PolyQ{0, 0, 0, 1}) == PolyQ{0, 0, 3});
    CHECK(poly_diff(PolyQ::constant(Rational(5, 3))).is_zero());
    CHECK(poly_diff(PolyQ{1, 0, 2, 0, 1}) == PolyQ{0, 4, 0, 4});
}

TEST_CASE("poly_eval") {
    CHECK(poly_eval(PolyQ{1, 0, -1}, Rational(1)) == Rational(0));
    CHECK(poly_eval(PolyQ{}, Rational(17, 3)) == Rational(0));
    CHECK(poly_eval(PolyQ{0, 1, 5}, Rational(2)) == Rational(22));
    CHECK(poly_eval(PolyD{0.0, 1.0, 5.0}, 2.0) == 22.0);
}

TEST_CASE("poly_to_float") {
    CHECK(rm::poly_to_float(PolyQ{Rational(0), Rational(1, 2)}) == PolyD{0.0, 0.5});
    CHECK(rm::poly_to_float(PolyQ::constant(Rational(1, 3))).coeff(0) == 1.0 / 3.0);
    CHECK(rm::poly_to_float(PolyQ{}).is_zero());
}

TEST_CASE("normalization trims zeros and is idempotent") {
    const PolyQ p(std::vector<Rational>{1, 2, 0, 0});
    CHECK(p.degree() == 1);
    CHECK(PolyQ(p.coeffs()) == p);
    CHECK(PolyQ(std::vector<Rational>{0, 0}).is_zero());
    CHECK(PolyQ{}.degree() == -1);
}

TEST_CASE("evaluation is a ring homomorphism (randomized)") {
    std::mt19937_64 rng(20240611);
    for (int trial = 0; trial < 200; ++trial) {
        const PolyQ p = random_poly(rng, 8);
        const PolyQ q = random_poly(rng, 8);
        const Rational r = random_rational(rng);
        CHECK(poly_eval(poly_mul(p, q), r) == poly_eval(p, r) * poly_eval(q, r));
        CHECK(poly_eval(poly_add(p, q), r) == poly_eval(p, r) + poly_eval(q, r));
    }
}

TEST_CASE("Leibniz rule holds exactly (randomized)") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const PolyQ p = random_poly(rng, 7);
        const PolyQ q = random_poly(rng, 7);
        CHECK(poly_diff(poly_mul(p, q)) == poly_add(poly_mul(poly_diff(p), q), poly_mul(p, poly_diff(q))));
    }
}

TEST_CASE("division and gcd") {
    const PolyQ a{1, 0, 1};  // 1 + x^2
    const PolyQ b{-1, 1};    // x - 1
    const auto [quot, rem] = rm::poly_divmod(a * b + PolyQ{3}, a);
    CHECK(quot == b);
    CHECK(rem == PolyQ{3});
    CHECK(rm::exact_quotient(a * b, a).value() == b);
    CHECK_FALSE(rm::exact_quotient(a * b + PolyQ{1}, a).has_value());
    CHECK(rm::poly_gcd(a * b * Rational(3), a * PolyQ{2, 1}) == a);
    CHECK_THROWS_AS((void)rm::poly_divmod(a, PolyQ{}), std::domain_error);
}

TEST_CASE("rational functions reduce common factors") {
    const PolyQ common{1, 1};
    const rm::RationalFunction<Rational> f(PolyQ{0, 2} * common, PolyQ{0, 0, 4} * common);
    CHECK(f.den().leading() == Rational(1));
    CHECK(f.num() == PolyQ{Rational(1, 2)});
    CHECK(f.den() == PolyQ{0, 1});
    CHECK(f.times_polynomial(PolyQ{0, 3}).value() == PolyQ{Rational(3, 2)});
    CHECK_FALSE(f.times_polynomial(PolyQ{1}).has_value());
    CHECK_THROWS_AS(rm::RationalFunction<Rational>(PolyQ{1}, PolyQ{}), std::domain_error);
}

TEST_CASE("float path uses compensated sums") {
    // 1e16 + 1 - 1e16 loses the 1 in naive summation.
    const PolyD p{1e16, 1.0};
    const PolyD q{1.0, 1.0};
    const PolyD prod = p * q;  // 1e16 + (1e16 + 1) x + x^2
    CHECK(prod.coeff(1) == 1e16 + 1.0);
    CHECK(std::abs(poly_eval(PolyD{1.0, -3.0, 3.0, -1.0}, 1.0 + 1e-5)) < 1e-14);
}
