#include "rosenmorse/figures.hpp"

#include <algorithm>
#include <cctype>
#include <numbers>
#include <stdexcept>

#include "rosenmorse/eckart.hpp"
#include "rosenmorse/susy.hpp"
#include "rosenmorse/trm.hpp"

namespace rm {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEckartPlotLength = 6.0;

Table header(Figure f, const FigureParams& p) {
    Table t;
    t.add_meta("tool", std::string("rmtool ") + kToolVersion);
    t.add_meta("figure", figure_name(f));
    t.add_meta("a", format_double(p.a));
    t.add_meta("b", format_double(p.b));
    t.add_meta("points", std::to_string(p.points));
    t.add_meta("convention", "a(a+1) centrifugal coefficient, levels n >= 1");
    return t;
}

// z_i = i * L / (points + 1), i = 1..points (open interval).
double open_grid(int i, int points, double length) { return length * i / (points + 1); }

Table eckart_figure(const FigureParams& p) {
    Table t = header(Figure::eckart_potential, p);
    const EckartParams<double> ep(p.a, p.b);
    std::vector<std::string> skipped;
    const auto levels = eckart_spectrum(ep, &skipped);
    if (p.a <= -1.0) skipped.insert(skipped.begin(), "a <= -1: centrifugal coefficient a(a+1) is not positive");
    for (std::size_t i = 0; i < skipped.size(); ++i) t.add_meta("warning_" + std::to_string(i + 1), skipped[i]);
    t.columns = {"z", "potential"};
    for (const auto& lv : levels) t.columns.push_back("level_" + std::to_string(lv.n));
    for (int i = 1; i <= p.points; ++i) {
        const double z = kEckartPlotLength * i / p.points;
        std::vector<Cell> row{z, eckart_potential(p.a, p.b, z)};
        for (const auto& lv : levels) row.emplace_back(lv.epsilon);
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table trm_potential_figure(const FigureParams& p) {
    Table t = header(Figure::trm_potential, p);
    const TrmParams<double> tp(p.a, p.b);
    const auto levels = trm_spectrum(tp, p.levels);
    t.columns = {"z", "potential"};
    for (const auto& lv : levels) t.columns.push_back("level_" + std::to_string(lv.n));
    for (int i = 1; i <= p.points; ++i) {
        const double z = open_grid(i, p.points, kPi);
        std::vector<Cell> row{z, trm_potential(tp, z)};
        for (const auto& lv : levels) row.emplace_back(lv.epsilon);
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table trm_wavefunction_figure(const FigureParams& p) {
    Table t = header(Figure::trm_wavefunctions, p);
    const TrmParams<double> tp(p.a, p.b);
    const auto r1 = trm_solution(tp, 1, Normalization::quadrature);
    const auto r2 = trm_solution(tp, 2, Normalization::quadrature);
    t.columns = {"z", "R_1", "R_2"};
    for (int i = 1; i <= p.points; ++i) {
        const double z = open_grid(i, p.points, kPi);
        t.rows.push_back({z, trm_wavefunction(r1, z), trm_wavefunction(r2, z)});
    }
    return t;
}

Table superpotential_figure(const FigureParams& p) {
    Table t = header(Figure::superpotential, p);
    const auto u = superpotential_from_gst(TrmParams<double>(p.a, p.b));
    t.columns = {"z", "U"};
    for (int i = 1; i <= p.points; ++i) {
        const double z = open_grid(i, p.points, kPi);
        t.rows.push_back({z, u(z)});
    }
    return t;
}

}  // namespace

Figure parse_figure(std::string_view text) {
    std::string s(text);
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::toupper(c); });
    if (s == "I" || s == "1") return Figure::eckart_potential;
    if (s == "II" || s == "2") return Figure::trm_potential;
    if (s == "III" || s == "3") return Figure::trm_wavefunctions;
    if (s == "IV" || s == "4") return Figure::superpotential;
    throw std::invalid_argument("unknown figure '" + std::string(text) + "' (expected I, II, III or IV)");
}

std::string figure_name(Figure f) {
    switch (f) {
        case Figure::eckart_potential: return "I";
        case Figure::trm_potential: return "II";
        case Figure::trm_wavefunctions: return "III";
        case Figure::superpotential: return "IV";
    }
    return "?";
}

FigureParams default_figure_params(Figure f) {
    switch (f) {
        case Figure::eckart_potential: return {-1.0, 50.0};
        case Figure::trm_potential: return {1.0, 50.0};
        case Figure::trm_wavefunctions: return {0.25, 1.0};
        case Figure::superpotential: return {1.0, 50.0};
    }
    return {};
}

Table figure_data(Figure f, const FigureParams& p) {
    if (p.points < 2) throw std::invalid_argument("figure_data: need at least 2 points");
    switch (f) {
        case Figure::eckart_potential: return eckart_figure(p);
        case Figure::trm_potential: return trm_potential_figure(p);
        case Figure::trm_wavefunctions: return trm_wavefunction_figure(p);
        case Figure::superpotential: return superpotential_figure(p);
    }
    throw std::invalid_argument("figure_data: unknown figure");
}

}  // namespace rm
