// rmtool: tables, figure data and verification suites for the
// trigonometric Rosen-Morse solutions.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "rosenmorse/eckart.hpp"
#include "rosenmorse/figures.hpp"
#include "rosenmorse/table.hpp"
#include "rosenmorse/trm.hpp"
#include "rosenmorse/verify.hpp"

namespace {

constexpr int kExitChecksFailed = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
    std::string a_text;
    std::string b_text;
    long n = 0;
    long n_max = 5;
    long grid = 0;
    int points = 2000;
    std::string system = "trm";
    std::string target;  // figure id or suite name
    std::string format = "csv";
    std::string output;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::optional<rm::Rational> parse_param(const std::string& text, const char* name) {
    if (text.empty()) return std::nullopt;
    try {
        return rm::Rational::parse(text);
    } catch (const std::exception& e) {
        throw UsageError(std::string("--") + name + ": " + e.what());
    }
}

rm::Rational required(const std::optional<rm::Rational>& v, const char* name) {
    if (!v) throw UsageError(std::string("--") + name + " is required");
    return *v;
}

rm::OutputFormat output_format(const RunConfig& cfg) {
    return cfg.format == "json" ? rm::OutputFormat::json : rm::OutputFormat::csv;
}

void emit(const rm::Table& t, const RunConfig& cfg, const std::string& default_name) {
    std::string path = cfg.output;
    if (path.empty()) {
        if (const char* dir = std::getenv("RMTOOL_OUTPUT_DIR"); dir != nullptr && *dir != '\0') {
            path = (std::filesystem::path(dir) / (default_name + (cfg.format == "json" ? ".json" : ".csv"))).string();
        }
    }
    if (path.empty()) {
        rm::write_table(t, output_format(cfg), std::cout);
        return;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open output file '" + path + "'");
    rm::write_table(t, output_format(cfg), os);
}

rm::Table base_table(const char* command, const RunConfig& cfg) {
    rm::Table t;
    t.add_meta("tool", std::string("rmtool ") + rm::kToolVersion);
    t.add_meta("command", command);
    if (!cfg.a_text.empty()) t.add_meta("a", cfg.a_text);
    if (!cfg.b_text.empty()) t.add_meta("b", cfg.b_text);
    return t;
}

int cmd_poly(const RunConfig& cfg) {
    const auto a = required(parse_param(cfg.a_text, "a"), "a");
    const auto b = required(parse_param(cfg.b_text, "b"), "b");
    if (cfg.n < 1) throw UsageError("--n must be >= 1");
    if (!(a > rm::Rational(-1))) throw UsageError("--a must be > -1");
    const rm::TrmParams<rm::Rational> p(a, b);
    const auto c = rm::trm_polynomial(p, static_cast<unsigned>(cfg.n));
    rm::Table t = base_table("poly", cfg);
    t.add_meta("n", std::to_string(cfg.n));
    t.add_meta("normalization", "unnormalized Rodrigues output (K_n = 1)");
    t.columns = {"power", "coefficient", "coefficient_float"};
    for (std::size_t k = 0; k < c.coeffs().size(); ++k) {
        t.rows.push_back({static_cast<long>(k), c.coeffs()[k].str(), c.coeffs()[k].to_double()});
    }
    emit(t, cfg, "poly_n" + std::to_string(cfg.n));
    return 0;
}

int cmd_spectrum(const RunConfig& cfg) {
    const auto a = required(parse_param(cfg.a_text, "a"), "a");
    const auto b = required(parse_param(cfg.b_text, "b"), "b");
    rm::Table t = base_table("spectrum", cfg);
    t.add_meta("system", cfg.system);
    if (cfg.system == "trm") {
        if (cfg.n_max < 1) throw UsageError("--n-max must be >= 1");
        if (!(a > rm::Rational(-1))) throw UsageError("--a must be > -1");
        t.add_meta("n_max", std::to_string(cfg.n_max));
        t.columns = {"n", "epsilon", "epsilon_float", "beta", "alpha"};
        for (const auto& lv : rm::trm_spectrum(rm::TrmParams<rm::Rational>(a, b), static_cast<unsigned>(cfg.n_max))) {
            t.rows.push_back({static_cast<long>(lv.n), lv.epsilon.str(), lv.epsilon.to_double(), lv.beta.str(),
                              lv.alpha.str()});
        }
    } else if (cfg.system == "eckart") {
        if (!(b > a * a)) throw UsageError("eckart requires b > a^2");
        std::vector<std::string> skipped;
        const auto levels = rm::eckart_spectrum(rm::EckartParams<rm::Rational>(a, b), &skipped);
        for (std::size_t i = 0; i < skipped.size(); ++i) t.add_meta("warning_" + std::to_string(i + 1), skipped[i]);
        t.columns = {"n", "epsilon", "epsilon_float", "beta"};
        for (const auto& lv : levels) {
            t.rows.push_back({static_cast<long>(lv.n), lv.epsilon.str(), lv.epsilon.to_double(), lv.beta.str()});
        }
    } else {
        throw UsageError("--system must be trm or eckart");
    }
    emit(t, cfg, "spectrum_" + cfg.system);
    return 0;
}

int cmd_figure(const RunConfig& cfg) {
    rm::Figure f{};
    try {
        f = rm::parse_figure(cfg.target);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    rm::FigureParams p = rm::default_figure_params(f);
    if (const auto a = parse_param(cfg.a_text, "a")) p.a = a->to_double();
    if (const auto b = parse_param(cfg.b_text, "b")) p.b = b->to_double();
    if (cfg.points < 2) throw UsageError("--points must be >= 2");
    p.points = cfg.points;
    if (f == rm::Figure::eckart_potential) {
        if (!(p.b > p.a * p.a)) throw UsageError("eckart requires b > a^2");
    } else if (!(p.a > -1.0)) {
        throw UsageError("--a must be > -1");
    }
    emit(rm::figure_data(f, p), cfg, "figure_" + rm::figure_name(f));
    return 0;
}

int cmd_verify(const RunConfig& cfg) {
    std::vector<std::string> suites;
    if (cfg.target == "all") {
        suites = rm::verify_suite_names();
    } else {
        const auto& names = rm::verify_suite_names();
        if (std::find(names.begin(), names.end(), cfg.target) == names.end()) {
            throw UsageError("unknown suite '" + cfg.target + "'");
        }
        suites.push_back(cfg.target);
    }
    rm::VerifyOptions opts;
    opts.a = parse_param(cfg.a_text, "a");
    opts.b = parse_param(cfg.b_text, "b");
    if (cfg.grid > 0) {
        if (cfg.grid < 16) throw UsageError("--grid must be >= 16");
        opts.grid = cfg.grid;
    }
    rm::Table t = base_table("verify", cfg);
    t.columns = {"suite", "check", "measured", "tolerance", "status"};
    bool all_pass = true;
    for (const auto& s : suites) {
        const auto report = rm::run_verify_suite(s, opts);
        for (const auto& c : report.checks) {
            t.rows.push_back({s, c.name, c.measured, c.tolerance, std::string(c.pass ? "PASS" : "FAIL")});
        }
        all_pass = all_pass && report.passed();
    }
    t.add_meta("result", all_pass ? "PASS" : "FAIL");
    if (cfg.output.empty() && std::getenv("RMTOOL_OUTPUT_DIR") == nullptr) {
        for (const auto& row : t.rows) {
            std::cout << std::get<std::string>(row[4]) << "  " << std::get<std::string>(row[0]) << "  "
                      << std::get<std::string>(row[1]) << "  measured=" << rm::format_double(std::get<double>(row[2]))
                      << "  tol=" << rm::format_double(std::get<double>(row[3])) << '\n';
        }
        std::cout << (all_pass ? "PASS" : "FAIL") << '\n';
    } else {
        emit(t, cfg, "verify_" + cfg.target);
    }
    return all_pass ? 0 : kExitChecksFailed;
}

void add_params(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--a", cfg.a_text, "parameter a (integer, p/q or decimal)");
    sub->add_option("--b", cfg.b_text, "parameter b (integer, p/q or decimal)");
}

void add_output(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("-o,--output", cfg.output, "output file (default: stdout or $RMTOOL_OUTPUT_DIR)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Rosen-Morse bound states, SUSY partners and numerical oracles"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(rm::kToolVersion));
    RunConfig cfg;

    auto* poly = app.add_subcommand("poly", "exact coefficients of the unnormalized C_n(x)");
    add_params(poly, cfg);
    poly->add_option("--n", cfg.n, "level index (>= 1)")->required();
    add_output(poly, cfg);

    auto* spectrum = app.add_subcommand("spectrum", "energy levels");
    add_params(spectrum, cfg);
    spectrum->add_option("--system", cfg.system, "trm or eckart")->check(CLI::IsMember({"trm", "eckart"}));
    spectrum->add_option("--n-max", cfg.n_max, "highest trm level");
    add_output(spectrum, cfg);

    auto* figure = app.add_subcommand("figure", "curve data for figures I-IV");
    figure->add_option("which", cfg.target, "I, II, III or IV")->required();
    add_params(figure, cfg);
    figure->add_option("--points", cfg.points, "samples per curve");
    add_output(figure, cfg);

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", cfg.target,
                       "polynomials, orthogonality, normalization, fdm, susy, classical, eckart or all")
        ->required();
    add_params(verify, cfg);
    verify->add_option("--grid", cfg.grid, "finite-difference interior points");
    add_output(verify, cfg);

    CLI11_PARSE(app, argc, argv);

    try {
        if (poly->parsed()) return cmd_poly(cfg);
        if (spectrum->parsed()) return cmd_spectrum(cfg);
        if (figure->parsed()) return cmd_figure(cfg);
        if (verify->parsed()) return cmd_verify(cfg);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
