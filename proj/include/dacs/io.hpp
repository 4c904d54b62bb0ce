#pragma once

#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dacs/errors.hpp"
#include "dacs/matrix.hpp"
#include "dacs/report.hpp"

namespace dacs {

// 17 significant digits: doubles survive a serialize/parse round trip.
inline std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

// Complex literal `re+imi` (e.g. 0.5+0.2i, -1.5, 0.3i); single-token,
// unambiguous.
inline std::string format_complex(complexd z) {
    std::string s = format_double(z.real());
    s += z.imag() < 0 ? "-" : "+";
    s += format_double(std::abs(z.imag()));
    s += "i";
    return s;
}

inline complexd parse_complex(const std::string& text) {
    const char* p = text.c_str();
    char* end = nullptr;
    const double first = std::strtod(p, &end);
    if (end == p) throw config_error("cannot parse complex literal '" + text + "'");
    if (*end == '\0') return {first, 0.0};
    if (*end == 'i' && *(end + 1) == '\0') return {0.0, first};
    const char* q = end;
    const double second = std::strtod(q, &end);
    if (end == q || *end != 'i' || *(end + 1) != '\0')
        throw config_error("cannot parse complex literal '" + text + "'");
    return {first, second};
}

// Tabular output: one '#'-prefixed metadata line carrying the resolved
// config, a header row, then comma-separated data rows.  Cells never
// contain commas.
struct table {
    std::string meta; // without the leading "# "
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

inline void write_csv(std::ostream& os, const table& t) {
    os << "# " << t.meta << "\n";
    for (std::size_t i = 0; i < t.header.size(); ++i)
        os << t.header[i] << (i + 1 < t.header.size() ? "," : "");
    os << "\n";
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            os << row[i] << (i + 1 < row.size() ? "," : "");
        os << "\n";
    }
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream is(line);
    while (std::getline(is, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.push_back("");
    return cells;
}

inline table read_csv(std::istream& is) {
    table t;
    std::string line;
    if (!std::getline(is, line) || line.rfind("# ", 0) != 0)
        throw config_error("table missing '# ' metadata line");
    t.meta = line.substr(2);
    if (!std::getline(is, line)) throw config_error("table missing header row");
    t.header = split_csv_line(line);
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        auto cells = split_csv_line(line);
        if (cells.size() != t.header.size())
            throw config_error("table row width " + std::to_string(cells.size()) +
                               " != header width " + std::to_string(t.header.size()));
        t.rows.push_back(std::move(cells));
    }
    return t;
}

// meta is a space-separated key=value string; values are space-free.
inline std::vector<std::pair<std::string, std::string>> parse_meta(const std::string& meta) {
    std::vector<std::pair<std::string, std::string>> kv;
    std::istringstream is(meta);
    std::string tok;
    while (is >> tok) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos) throw config_error("malformed meta token '" + tok + "'");
        kv.emplace_back(tok.substr(0, eq), tok.substr(eq + 1));
    }
    return kv;
}

inline table report_to_table(const verification_report& report, const std::string& meta) {
    table t;
    t.meta = meta;
    t.header = {"name", "status", "residual", "tolerance", "context"};
    for (const auto& e : report.entries)
        t.rows.push_back({e.name, to_string(e.status), format_double(e.residual),
                          format_double(e.tolerance), e.context});
    return t;
}

// Cells that parse fully as doubles become JSON numbers; everything else
// stays a string (non-finite residuals included).
inline nlohmann::json cell_to_json(const std::string& cell) {
    if (cell.empty()) return nullptr;
    char* end = nullptr;
    const double v = std::strtod(cell.c_str(), &end);
    if (*end == '\0' && std::isfinite(v)) return v;
    return cell;
}

inline nlohmann::json table_to_json(const table& t) {
    nlohmann::json j;
    j["meta"] = t.meta;
    j["rows"] = nlohmann::json::array();
    for (const auto& row : t.rows) {
        nlohmann::json obj;
        for (std::size_t i = 0; i < t.header.size(); ++i) obj[t.header[i]] = cell_to_json(row[i]);
        j["rows"].push_back(std::move(obj));
    }
    return j;
}

inline nlohmann::json report_to_json(const verification_report& report, const std::string& meta) {
    nlohmann::json j = table_to_json(report_to_table(report, meta));
    j["overall_pass"] = report.overall_pass();
    return j;
}

} // namespace dacs
