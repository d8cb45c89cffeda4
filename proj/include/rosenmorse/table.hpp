#pragma once

// Tabular output shared by the CLI: CSV with a `# key=value` header, or JSON
// carrying the same meta/columns/rows structure.

#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace rm {

using Cell = std::variant<double, long, std::string>;

struct Table {
    std::vector<std::pair<std::string, std::string>> meta;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_meta(std::string key, std::string value) { meta.emplace_back(std::move(key), std::move(value)); }
    [[nodiscard]] std::vector<double> column(const std::string& name) const;
};

/// Shortest decimal that round-trips to the same double (at most 17 digits).
[[nodiscard]] std::string format_double(double v);

enum class OutputFormat { csv, json };

void write_csv(const Table& t, std::ostream& os);
void write_json(const Table& t, std::ostream& os);
void write_table(const Table& t, OutputFormat fmt, std::ostream& os);

/// Parses what write_csv produced (meta header, column row, numeric rows).
[[nodiscard]] Table read_csv(std::istream& is);

inline constexpr const char* kToolVersion = "1.0.0";

}  // namespace rm
