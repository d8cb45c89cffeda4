#pragma once

// Verification suites behind `rmtool verify`. Each check reports the measured
// residual next to its tolerance.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rosenmorse/rational.hpp"

namespace rm {

struct CheckResult {
    std::string name;
    double measured = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct VerifyReport {
    std::string suite;
    std::vector<CheckResult> checks;

    [[nodiscard]] bool passed() const;
    void add(std::string name, double measured, double tolerance) {
        checks.push_back({std::move(name), measured, tolerance, measured <= tolerance});
    }
};

struct VerifyOptions {
    std::optional<Rational> a;
    std::optional<Rational> b;
    std::optional<long> grid;  // suite default when absent
};

/// Known suites: polynomials, orthogonality, normalization, fdm, susy, classical, eckart.
[[nodiscard]] const std::vector<std::string>& verify_suite_names();
[[nodiscard]] VerifyReport run_verify_suite(std::string_view suite, const VerifyOptions& opts);

// Individual pieces, shared with the acceptance tests.

/// Number of nonzero coefficients in the exact ODE residual of C_1..C_{n_max}.
[[nodiscard]] long trm_residual_nonzero_count(const Rational& a, const Rational& b, unsigned n_max);

struct FdmSpectrumCheck {
    std::vector<double> exact;
    std::vector<double> fdm;          // grid N
    std::vector<double> fdm_halved;  // grid 2N+1 (step halved)
    [[nodiscard]] double max_rel_error() const;
    /// log2(err_N / err_2N+1) for each level.
    [[nodiscard]] std::vector<double> orders() const;
    /// (4 fdm_halved - fdm) / 3 for each level.
    [[nodiscard]] std::vector<double> richardson() const;
};

[[nodiscard]] FdmSpectrumCheck trm_fdm_check(double a, double b, long grid, unsigned levels);
[[nodiscard]] FdmSpectrumCheck eckart_fdm_check(double a, double b, long grid, unsigned levels);

}  // namespace rm
