#include "rosenmorse/table.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace rm {

namespace {

std::string cell_text(const Cell& c) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
                return format_double(v);
            } else if constexpr (std::is_same_v<T, long>) {
                return std::to_string(v);
            } else {
                return v;
            }
        },
        c);
}

// RFC 4180 quoting for fields that contain separators or quotes.
std::string csv_field(const std::string& text) {
    if (text.find_first_of(",\"\n") == std::string::npos) return text;
    std::string out = "\"";
    for (const char ch : text) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char ch = line[i];
        if (quoted) {
            if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                cur += '"';
                ++i;
            } else if (ch == '"') {
                quoted = false;
            } else {
                cur += ch;
            }
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    fields.push_back(std::move(cur));
    return fields;
}

}  // namespace

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    std::array<char, 64> buf{};
    const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    if (ec != std::errc{}) throw std::runtime_error("format_double: conversion failed");
    return {buf.data(), end};
}

std::vector<double> Table::column(const std::string& name) const {
    const auto it = std::find(columns.begin(), columns.end(), name);
    if (it == columns.end()) throw std::out_of_range("Table: no column '" + name + "'");
    const auto idx = static_cast<std::size_t>(it - columns.begin());
    std::vector<double> out;
    out.reserve(rows.size());
    for (const auto& row : rows) {
        const Cell& c = row.at(idx);
        if (const auto* d = std::get_if<double>(&c)) {
            out.push_back(*d);
        } else if (const auto* l = std::get_if<long>(&c)) {
            out.push_back(static_cast<double>(*l));
        } else {
            throw std::invalid_argument("Table: column '" + name + "' is not numeric");
        }
    }
    return out;
}

void write_csv(const Table& t, std::ostream& os) {
    for (const auto& [k, v] : t.meta) os << "# " << k << '=' << v << '\n';
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << csv_field(t.columns[i]);
    os << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(cell_text(row[i]));
        os << '\n';
    }
}

void write_json(const Table& t, std::ostream& os) {
    nlohmann::ordered_json j;
    j["meta"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : t.meta) j["meta"][k] = v;
    j["columns"] = t.columns;
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
        auto r = nlohmann::ordered_json::array();
        for (const auto& c : row) {
            std::visit(
                [&r](const auto& v) {
                    using T = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<T, double>) {
                        if (std::isfinite(v)) {
                            r.push_back(v);
                        } else {
                            r.push_back(nullptr);
                        }
                    } else {
                        r.push_back(v);
                    }
                },
                c);
        }
        j["rows"].push_back(std::move(r));
    }
    os << j.dump(2) << '\n';
}

void write_table(const Table& t, OutputFormat fmt, std::ostream& os) {
    if (fmt == OutputFormat::csv) {
        write_csv(t, os);
    } else {
        write_json(t, os);
    }
}

Table read_csv(std::istream& is) {
    Table t;
    std::string line;
    bool have_header = false;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line.rfind("# ", 0) == 0) {
            const auto eq = line.find('=');
            if (eq == std::string::npos) continue;
            t.add_meta(line.substr(2, eq - 2), line.substr(eq + 1));
            continue;
        }
        const auto fields = split_csv_line(line);
        if (!have_header) {
            t.columns = fields;
            have_header = true;
            continue;
        }
        std::vector<Cell> row;
        for (const auto& field : fields) {
            double v = 0.0;
            const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
            if (ec == std::errc{} && ptr == field.data() + field.size()) {
                row.emplace_back(v);
            } else {
                row.emplace_back(field);
            }
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

}  // namespace rm
