#pragma once

// Minimal CSV support: UTF-8, comma-separated, double-quote escaping,
// mandatory header row. Leading '#' lines are treated as comments so our
// own outputs (which carry a provenance comment) read back cleanly.
// Number parsing goes through std::from_chars and is locale-independent.

#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "shockgrid/errors.hpp"

namespace shockgrid {

struct csv_table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::map<std::string, std::size_t> column_index;

    std::size_t row_count() const { return rows.size(); }

    bool has_column(const std::string& name) const { return column_index.count(name) > 0; }

    void require_columns(const std::vector<std::string>& names, const std::string& context) const {
        for (const auto& name : names)
            if (!has_column(name))
                raise(errc::schema_error, context + ": missing column '" + name + "'");
    }

    const std::string& cell(std::size_t row, const std::string& column) const {
        auto it = column_index.find(column);
        if (it == column_index.end())
            raise(errc::schema_error, "no column '" + column + "'");
        return rows[row][it->second];
    }

    double number(std::size_t row, const std::string& column) const {
        const std::string& s = cell(row, column);
        double value = 0.0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        if (ec != std::errc() || ptr != s.data() + s.size())
            raise(errc::schema_error, "row " + std::to_string(row + 2) + ", column '" + column +
                                          "': '" + s + "' is not a number");
        return value;
    }

    // Empty cell -> nullopt; anything else must parse.
    std::optional<double> optional_number(std::size_t row, const std::string& column) const {
        if (!has_column(column)) return std::nullopt;
        const std::string& s = cell(row, column);
        if (s.empty() || s == "NA" || s == "na") return std::nullopt;
        return number(row, column);
    }
};

namespace detail {

inline std::string trim(std::string_view s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    std::size_t e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

} // namespace detail

inline csv_table parse_csv(const std::string& text) {
    csv_table table;
    std::vector<std::string> record;
    std::string field;
    bool in_quotes = false;
    bool line_started = false;
    bool line_is_comment = false;

    auto end_field = [&] { record.push_back(in_quotes ? field : detail::trim(field)); };
    auto end_record = [&] {
        bool blank = record.empty() || (record.size() == 1 && record[0].empty());
        if (!line_is_comment && !blank) {
            if (table.header.empty())
                table.header = record;
            else {
                if (record.size() != table.header.size())
                    raise(errc::schema_error,
                          "row " + std::to_string(table.rows.size() + 2) + " has " +
                              std::to_string(record.size()) + " fields, header has " +
                              std::to_string(table.header.size()));
                table.rows.push_back(record);
            }
        }
        record.clear();
        line_started = false;
        line_is_comment = false;
    };

    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (!line_started && !in_quotes) {
            line_started = true;
            if (c == '#') line_is_comment = true;
        }
        if (line_is_comment) {
            if (c == '\n') end_record();
            ++i;
            continue;
        }
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field.push_back('"');
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                field.push_back(c);
            }
        } else if (c == '"') {
            in_quotes = true;
        } else if (c == ',') {
            end_field();
            field.clear();
        } else if (c == '\n') {
            end_field();
            field.clear();
            end_record();
        } else if (c != '\r') {
            field.push_back(c);
        }
        ++i;
    }
    if (in_quotes) raise(errc::schema_error, "unterminated quote in CSV input");
    if (line_started && !line_is_comment) {
        end_field();
        end_record();
    }
    if (table.header.empty()) raise(errc::schema_error, "CSV input has no header row");
    for (std::size_t c = 0; c < table.header.size(); ++c) {
        table.header[c] = detail::trim(table.header[c]);
        if (!table.column_index.emplace(table.header[c], c).second)
            raise(errc::schema_error, "duplicate column '" + table.header[c] + "'");
    }
    return table;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(errc::schema_error, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline csv_table read_csv(const std::string& path) {
    try {
        return parse_csv(read_file(path));
    } catch (const error& e) {
        if (e.code() == errc::schema_error) raise(errc::schema_error, path + ": " + e.what());
        throw;
    }
}

inline std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out += '"';
    return out;
}

// Fixed 6-decimal formatting used for all fractional outputs.
inline std::string format_fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

// Minimal representation (no trailing zeros); used for canonical scenario
// serialization where values are human-scale percents.
inline std::string format_minimal(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

} // namespace shockgrid
