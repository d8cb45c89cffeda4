#pragma once

#include <string>
#include <string_view>

#include "rosenmorse/table.hpp"

namespace rm {

enum class Figure { eckart_potential = 1, trm_potential = 2, trm_wavefunctions = 3, superpotential = 4 };

/// "I".."IV" (case-insensitive) or "1".."4".
[[nodiscard]] Figure parse_figure(std::string_view text);
[[nodiscard]] std::string figure_name(Figure f);

struct FigureParams {
    double a = 0.0;
    double b = 0.0;
    int points = 2000;
    unsigned levels = 5;  // level lines for the potential figures
};

/// Caption parameters: I (a=-1, b=50), II and IV (a=1, b=50), III (a=0.25, b=1).
[[nodiscard]] FigureParams default_figure_params(Figure f);

/// Columns:
///   I   z, potential, level_<n>...   (z in (0, 6])
///   II  z, potential, level_1..level_<levels>   (z in (0, pi))
///   III z, R_1, R_2   (unit-normalized)
///   IV  z, U
[[nodiscard]] Table figure_data(Figure f, const FigureParams& p);

}  // namespace rm
