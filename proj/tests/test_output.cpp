#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

#include "rosenmorse/figures.hpp"
#include "rosenmorse/numerics.hpp"
#include "rosenmorse/table.hpp"

TEST_CASE("doubles round-trip through their text form") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-1e3, 1e3);
    for (int i = 0; i < 500; ++i) {
        const double v = u(rng) * std::pow(10.0, static_cast<int>(rng() % 40) - 20);
        CHECK(std::stod(rm::format_double(v)) == v);
    }
    CHECK(rm::format_double(0.1) == "0.1");
    CHECK(rm::format_double(-621.0) == "-621");
    CHECK(rm::format_double(std::numeric_limits<double>::quiet_NaN()) == "nan");
    CHECK(rm::format_double(-std::numeric_limits<double>::infinity()) == "-inf");
}

TEST_CASE("csv round trip keeps meta, quoting and numbers") {
    rm::Table t;
    t.add_meta("a", "1/4");
    t.add_meta("note", "x = cot z");
    t.columns = {"n", "label", "value"};
    t.rows.push_back({1L, std::string("eps[n=1,N=4000]"), 0.1});
    t.rows.push_back({2L, std::string("say \"hi\""), -2.5e-300});
    std::stringstream ss;
    rm::write_csv(t, ss);
    const auto back = rm::read_csv(ss);
    CHECK(back.meta == t.meta);
    CHECK(back.columns == t.columns);
    REQUIRE(back.rows.size() == 2);
    CHECK(std::get<std::string>(back.rows[0][1]) == "eps[n=1,N=4000]");
    CHECK(std::get<std::string>(back.rows[1][1]) == "say \"hi\"");
    CHECK(back.column("value") == std::vector<double>{0.1, -2.5e-300});
    CHECK_THROWS((void)back.column("label"));
    CHECK_THROWS((void)back.column("missing"));
}

TEST_CASE("json mirrors the csv structure") {
    rm::Table t;
    t.add_meta("figure", "II");
    t.columns = {"z", "v"};
    t.rows.push_back({0.5, std::numeric_limits<double>::infinity()});
    std::stringstream ss;
    rm::write_json(t, ss);
    const auto j = nlohmann::json::parse(ss.str());
    CHECK(j["meta"]["figure"] == "II");
    CHECK(j["columns"].size() == 2);
    CHECK(j["rows"][0][0] == 0.5);
    CHECK(j["rows"][0][1].is_null());
}

TEST_CASE("figure names") {
    CHECK(rm::parse_figure("ii") == rm::Figure::trm_potential);
    CHECK(rm::parse_figure("4") == rm::Figure::superpotential);
    CHECK(rm::figure_name(rm::Figure::trm_wavefunctions) == "III");
    CHECK_THROWS_AS((void)rm::parse_figure("V"), std::invalid_argument);
}

TEST_CASE("figure II: one interior minimum, divergent ends") {
    const auto t = rm::figure_data(rm::Figure::trm_potential, rm::default_figure_params(rm::Figure::trm_potential));
    const auto v = t.column("potential");
    int minima = 0;
    for (std::size_t i = 1; i + 1 < v.size(); ++i) minima += (v[i] < v[i - 1] && v[i] < v[i + 1]) ? 1 : 0;
    CHECK(minima == 1);
    CHECK(v.front() > 1e5);
    CHECK(v.back() > 1e5);
    const auto l1 = t.column("level_1");
    CHECK(l1.front() == -621.0);
    CHECK(t.columns.size() == 7);
}

TEST_CASE("figure III: node counts of the two lowest states") {
    const auto t =
        rm::figure_data(rm::Figure::trm_wavefunctions, rm::default_figure_params(rm::Figure::trm_wavefunctions));
    auto sampled = [&](const char* col) {
        const auto v = t.column(col);
        rm::SampledFunction f;
        f.values = Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
        return f;
    };
    CHECK(rm::count_sign_changes(sampled("R_1")) == 0);
    CHECK(rm::count_sign_changes(sampled("R_2")) == 1);
}

TEST_CASE("figure IV: strictly decreasing superpotential") {
    const auto t = rm::figure_data(rm::Figure::superpotential, rm::default_figure_params(rm::Figure::superpotential));
    const auto u = t.column("U");
    for (std::size_t i = 1; i < u.size(); ++i) CHECK(u[i] < u[i - 1]);
}

TEST_CASE("figure I lists bound Eckart levels and the caption warning") {
    const auto t = rm::figure_data(rm::Figure::eckart_potential, rm::default_figure_params(rm::Figure::eckart_potential));
    int warnings = 0;
    for (const auto& [k, v] : t.meta) warnings += k.rfind("warning_", 0) == 0 ? 1 : 0;
    CHECK(warnings >= 1);
    CHECK(t.columns.front() == "z");
    CHECK(t.columns.back() == "level_8");
    const auto z = t.column("z");
    CHECK(z.back() == doctest::Approx(6.0));
}

TEST_CASE("figure output is deterministic") {
    const auto p = rm::default_figure_params(rm::Figure::trm_wavefunctions);
    std::stringstream a, b;
    rm::write_csv(rm::figure_data(rm::Figure::trm_wavefunctions, p), a);
    rm::write_csv(rm::figure_data(rm::Figure::trm_wavefunctions, p), b);
    CHECK(a.str() == b.str());
}
