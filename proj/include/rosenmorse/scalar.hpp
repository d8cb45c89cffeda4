#pragma once

#include <cmath>
#include <concepts>
#include <string>

#include "rosenmorse/rational.hpp"

namespace rm {

template <typename S>
concept Scalar = std::same_as<S, Rational> || std::floating_point<S>;

template <Scalar S>
inline constexpr bool is_exact_v = std::same_as<S, Rational>;

template <Scalar S>
[[nodiscard]] inline double to_double(const S& v) {
    if constexpr (is_exact_v<S>) {
        return v.to_double();
    } else {
        return static_cast<double>(v);
    }
}

template <Scalar S>
[[nodiscard]] inline S from_rational(const Rational& v) {
    if constexpr (is_exact_v<S>) {
        return v;
    } else {
        return static_cast<S>(v.to_double());
    }
}

template <Scalar S>
[[nodiscard]] inline bool is_zero(const S& v) {
    if constexpr (is_exact_v<S>) {
        return v.is_zero();
    } else {
        return v == S(0);
    }
}

/// Sum of many terms. Exact for Rational; Neumaier-compensated for floats.
template <Scalar S>
class Accumulator {
public:
    void add(const S& term) {
        if constexpr (is_exact_v<S>) {
            sum_ += term;
        } else {
            const S t = sum_ + term;
            if (std::abs(sum_) >= std::abs(term)) {
                comp_ += (sum_ - t) + term;
            } else {
                comp_ += (term - t) + sum_;
            }
            sum_ = t;
        }
    }

    [[nodiscard]] S value() const {
        if constexpr (is_exact_v<S>) {
            return sum_;
        } else {
            return sum_ + comp_;
        }
    }

private:
    S sum_{0};
    S comp_{0};
};

}  // namespace rm
