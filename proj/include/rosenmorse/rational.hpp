#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace rm {

/// Exact arbitrary-precision fraction. Always canonical: denominator > 0 and
/// gcd(|num|, den) = 1.
class Rational {
public:
    Rational() = default;
    Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(int v) : q_(v) {}   // NOLINT(google-explicit-constructor)
    Rational(long num, long den);
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    /// Accepts "p", "p/q", "-p/q" and finite decimals such as "0.25" or "-1.5e-2".
    static Rational parse(std::string_view text);

    /// Exact value of a finite binary double.
    static Rational from_double(double v);

    [[nodiscard]] std::string str() const { return q_.get_str(); }
    /// Nearest double (ties to even).
    [[nodiscard]] double to_double() const;
    explicit operator double() const { return to_double(); }
    [[nodiscard]] const mpq_class& raw() const { return q_; }

    [[nodiscard]] bool is_zero() const { return sgn(q_) == 0; }
    [[nodiscard]] int sign() const { return sgn(q_); }
    [[nodiscard]] bool is_integer() const { return q_.get_den() == 1; }
    [[nodiscard]] mpz_class numerator() const { return q_.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return q_.get_den(); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational l, const Rational& r) { return l += r; }
    friend Rational operator-(Rational l, const Rational& r) { return l -= r; }
    friend Rational operator*(Rational l, const Rational& r) { return l *= r; }
    friend Rational operator/(Rational l, const Rational& r) { return l /= r; }
    friend Rational operator-(const Rational& v) { return Rational(mpq_class(-v.q_)); }

    friend bool operator==(const Rational& l, const Rational& r) { return cmp(l.q_, r.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& l, const Rational& r) {
        const int c = cmp(l.q_, r.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& v);

private:
    mpq_class q_{0};
};

Rational pow(const Rational& base, unsigned exponent);
Rational abs(const Rational& v);

}  // namespace rm
