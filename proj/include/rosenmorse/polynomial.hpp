#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rosenmorse/scalar.hpp"

namespace rm {

/// Dense univariate polynomial, coefficients lowest power first.
///
/// The representation is kept normalized: trailing zero coefficients are
/// dropped, so the zero polynomial has an empty coefficient vector and
/// degree -1.
template <Scalar S>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<S> coeffs) : c_(std::move(coeffs)) { normalize(); }
    Polynomial(std::initializer_list<S> coeffs) : c_(coeffs) { normalize(); }

    static Polynomial constant(const S& v) { return Polynomial(std::vector<S>{v}); }
    static Polynomial monomial(const S& coeff, std::size_t power) {
        std::vector<S> c(power + 1, S(0));
        c[power] = coeff;
        return Polynomial(std::move(c));
    }
    static Polynomial x() { return Polynomial({S(0), S(1)}); }

    [[nodiscard]] const std::vector<S>& coeffs() const { return c_; }
    [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
    [[nodiscard]] bool is_zero() const { return c_.empty(); }
    [[nodiscard]] S coeff(std::size_t power) const { return power < c_.size() ? c_[power] : S(0); }
    [[nodiscard]] S leading() const { return c_.empty() ? S(0) : c_.back(); }

    /// Horner evaluation.
    template <Scalar T = S>
    [[nodiscard]] T operator()(const T& x) const {
        T acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            acc = acc * x + static_cast<T>(*it);
        }
        return acc;
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), S(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        normalize();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), S(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        normalize();
        return *this;
    }
    Polynomial& operator*=(const S& k) {
        for (auto& v : c_) v *= k;
        normalize();
        return *this;
    }

    friend Polynomial operator+(Polynomial l, const Polynomial& r) { return l += r; }
    friend Polynomial operator-(Polynomial l, const Polynomial& r) { return l -= r; }
    friend Polynomial operator-(Polynomial p) {
        for (auto& v : p.c_) v = -v;
        return p;
    }
    friend Polynomial operator*(Polynomial p, const S& k) { return p *= k; }
    friend Polynomial operator*(const S& k, Polynomial p) { return p *= k; }

    friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
        if (p.is_zero() || q.is_zero()) return {};
        std::vector<Accumulator<S>> acc(p.c_.size() + q.c_.size() - 1);
        for (std::size_t i = 0; i < p.c_.size(); ++i) {
            for (std::size_t j = 0; j < q.c_.size(); ++j) acc[i + j].add(p.c_[i] * q.c_[j]);
        }
        std::vector<S> out;
        out.reserve(acc.size());
        for (const auto& a : acc) out.push_back(a.value());
        return Polynomial(std::move(out));
    }

    friend bool operator==(const Polynomial& l, const Polynomial& r) { return l.c_ == r.c_; }

    [[nodiscard]] std::string str(const char* var = "x") const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (is_zero_scalar(c_[i])) continue;
            if (!first) os << " + ";
            os << "(" << c_[i] << ")";
            if (i >= 1) os << "*" << var;
            if (i >= 2) os << "^" << i;
            first = false;
        }
        return os.str();
    }

private:
    static bool is_zero_scalar(const S& v) { return rm::is_zero(v); }

    void normalize() {
        while (!c_.empty() && is_zero_scalar(c_.back())) c_.pop_back();
    }

    std::vector<S> c_;
};

template <Scalar S>
[[nodiscard]] Polynomial<S> poly_add(const Polynomial<S>& p, const Polynomial<S>& q) {
    return p + q;
}

template <Scalar S>
[[nodiscard]] Polynomial<S> poly_mul(const Polynomial<S>& p, const Polynomial<S>& q) {
    return p * q;
}

template <Scalar S>
[[nodiscard]] Polynomial<S> poly_diff(const Polynomial<S>& p) {
    const auto& c = p.coeffs();
    if (c.size() <= 1) return {};
    std::vector<S> d(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * S(static_cast<long>(i));
    return Polynomial<S>(std::move(d));
}

template <Scalar S, Scalar T>
[[nodiscard]] T poly_eval(const Polynomial<S>& p, const T& x) {
    return p.template operator()<T>(x);
}

/// Nearest-double image of an exact polynomial.
template <std::floating_point F = double>
[[nodiscard]] Polynomial<F> poly_to_float(const Polynomial<Rational>& p) {
    std::vector<F> c;
    c.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs()) c.push_back(static_cast<F>(v.to_double()));
    return Polynomial<F>(std::move(c));
}

/// Euclidean division over a field: p = quot*q + rem, deg rem < deg q.
template <Scalar S>
[[nodiscard]] std::pair<Polynomial<S>, Polynomial<S>> poly_divmod(const Polynomial<S>& p,
                                                                    const Polynomial<S>& q) {
    if (q.is_zero()) throw std::domain_error("poly_divmod: division by the zero polynomial");
    if (p.degree() < q.degree()) return {Polynomial<S>{}, p};
    std::vector<S> rem = p.coeffs();
    const auto& d = q.coeffs();
    const std::size_t dq = d.size() - 1;
    std::vector<S> quot(rem.size() - dq, S(0));
    for (std::size_t k = quot.size(); k-- > 0;) {
        const S factor = rem[k + dq] / d[dq];
        quot[k] = factor;
        for (std::size_t j = 0; j <= dq; ++j) rem[k + j] -= factor * d[j];
        rem[k + dq] = S(0);
    }
    rem.resize(dq);
    return {Polynomial<S>(std::move(quot)), Polynomial<S>(std::move(rem))};
}

/// p / q when q divides p. Exact test for Rational; for floats the remainder
/// must be below `rel_tol` times the largest coefficient of p.
template <Scalar S>
[[nodiscard]] std::optional<Polynomial<S>> exact_quotient(const Polynomial<S>& p, const Polynomial<S>& q,
                                                          double rel_tol = 1e-12) {
    auto [quot, rem] = poly_divmod(p, q);
    if constexpr (is_exact_v<S>) {
        if (!rem.is_zero()) return std::nullopt;
    } else {
        S scale(0);
        for (const auto& v : p.coeffs()) scale = std::max(scale, std::abs(v));
        for (const auto& v : rem.coeffs()) {
            if (std::abs(v) > rel_tol * scale) return std::nullopt;
        }
    }
    return quot;
}

/// Monic greatest common divisor (zero if both inputs are zero). Exact scalars only.
[[nodiscard]] inline Polynomial<Rational> poly_gcd(Polynomial<Rational> p, Polynomial<Rational> q) {
    while (!q.is_zero()) {
        auto rem = poly_divmod(p, q).second;
        p = std::move(q);
        q = std::move(rem);
    }
    if (p.is_zero()) return p;
    return p * (Rational(1) / p.leading());
}

/// num/den with den nonzero. Over Rational the pair is kept coprime with a
/// monic denominator.
template <Scalar S>
class RationalFunction {
public:
    RationalFunction() : num_{}, den_(Polynomial<S>::constant(S(1))) {}
    RationalFunction(Polynomial<S> num, Polynomial<S> den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
        reduce();
    }
    explicit RationalFunction(Polynomial<S> p) : RationalFunction(std::move(p), Polynomial<S>::constant(S(1))) {}

    [[nodiscard]] const Polynomial<S>& num() const { return num_; }
    [[nodiscard]] const Polynomial<S>& den() const { return den_; }

    template <Scalar T = S>
    [[nodiscard]] T operator()(const T& x) const {
        return num_.template operator()<T>(x) / den_.template operator()<T>(x);
    }

    /// this * p, if the product is a polynomial.
    [[nodiscard]] std::optional<Polynomial<S>> times_polynomial(const Polynomial<S>& p) const {
        return exact_quotient(num_ * p, den_);
    }

    friend bool operator==(const RationalFunction& l, const RationalFunction& r) {
        return l.num_ == r.num_ && l.den_ == r.den_;
    }

private:
    void reduce() {
        if constexpr (is_exact_v<S>) {
            if (num_.is_zero()) {
                den_ = Polynomial<S>::constant(S(1));
                return;
            }
            const auto g = poly_gcd(num_, den_);
            num_ = *exact_quotient(num_, g);
            den_ = *exact_quotient(den_, g);
            const S lead = den_.leading();
            num_ *= S(1) / lead;
            den_ *= S(1) / lead;
        }
    }

    Polynomial<S> num_;
    Polynomial<S> den_;
};

}  // namespace rm
