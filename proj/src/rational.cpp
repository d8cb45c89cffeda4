#include "rosenmorse/rational.hpp"

#include <cmath>
#include <cstdint>
#include <cstring>
#include <ostream>
#include <stdexcept>

namespace rm {

Rational::Rational(long num, long den) : q_(num, den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
}

namespace {

mpz_class parse_integer(std::string_view digits, std::string_view whole) {
    if (digits.empty()) throw std::invalid_argument("Rational: cannot parse '" + std::string(whole) + "'");
    for (char c : digits) {
        if (c < '0' || c > '9') throw std::invalid_argument("Rational: cannot parse '" + std::string(whole) + "'");
    }
    return mpz_class(std::string(digits), 10);
}

Rational parse_decimal(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    long exponent = 0;
    if (const auto e = body.find_first_of("eE"); e != std::string_view::npos) {
        std::string_view exp_part = body.substr(e + 1);
        bool exp_negative = false;
        if (!exp_part.empty() && (exp_part.front() == '-' || exp_part.front() == '+')) {
            exp_negative = exp_part.front() == '-';
            exp_part.remove_prefix(1);
        }
        const mpz_class ev = parse_integer(exp_part, text);
        if (!ev.fits_slong_p() || abs(ev) > 4000) throw std::invalid_argument("Rational: exponent out of range");
        exponent = exp_negative ? -ev.get_si() : ev.get_si();
        body = body.substr(0, e);
    }
    std::string digits;
    long frac_len = 0;
    if (const auto dot = body.find('.'); dot != std::string_view::npos) {
        digits = std::string(body.substr(0, dot)) + std::string(body.substr(dot + 1));
        frac_len = static_cast<long>(body.size() - dot - 1);
    } else {
        digits = std::string(body);
    }
    mpz_class num = parse_integer(digits, text);
    const long shift = exponent - frac_len;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
    mpq_class q = shift < 0 ? mpq_class(num, scale) : mpq_class(num * scale);
    q.canonicalize();
    if (negative) q = -q;
    return Rational(q);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    if (text.empty()) throw std::invalid_argument("Rational: empty string");
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        const Rational num = parse_decimal(text.substr(0, slash));
        const Rational den = parse_decimal(text.substr(slash + 1));
        if (den.is_zero()) throw std::domain_error("Rational: zero denominator in '" + std::string(text) + "'");
        return num / den;
    }
    return parse_decimal(text);
}

double Rational::to_double() const {
    // mpq_get_d truncates; pick the nearer of the truncated value and its
    // neighbour away from zero.
    const double t = q_.get_d();
    if (!std::isfinite(t)) return t;
    const double away = std::nextafter(t, sgn(q_) < 0 ? -HUGE_VAL : HUGE_VAL);
    if (!std::isfinite(away)) return t;
    const mpq_class dt = abs(q_ - mpq_class(t));
    const mpq_class da = abs(q_ - mpq_class(away));
    const int c = cmp(dt, da);
    if (c < 0) return t;
    if (c > 0) return away;
    std::int64_t bits = 0;
    std::memcpy(&bits, &t, sizeof bits);
    return (bits & 1) == 0 ? t : away;
}

Rational Rational::from_double(double v) {
    if (!std::isfinite(v)) throw std::domain_error("Rational: non-finite double");
    return Rational(mpq_class(v));
}

std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.str(); }

Rational pow(const Rational& base, unsigned exponent) {
    Rational result(1);
    Rational b = base;
    while (exponent != 0) {
        if (exponent & 1U) result *= b;
        exponent >>= 1U;
        if (exponent != 0) b *= b;
    }
    return result;
}

Rational abs(const Rational& v) { return v.sign() < 0 ? -v : v; }

}  // namespace rm
