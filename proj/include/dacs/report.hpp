#pragma once

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

namespace dacs {

enum class check_status { pass, fail, skip };

inline const char* to_string(check_status s) {
    switch (s) {
        case check_status::pass: return "pass";
        case check_status::fail: return "fail";
        default: return "skip";
    }
}

struct check_entry {
    std::string name;
    check_status status = check_status::pass;
    double residual = 0.0;
    double tolerance = 0.0;
    std::string context;

    bool passed() const { return status != check_status::fail; }
};

// Aggregated residual checks; the artifact's acceptance surface.
// Entries are assembled sorted by name (names carry an execution-order
// prefix, so sorted order equals execution order).
struct verification_report {
    std::vector<check_entry> entries;

    void add(std::string name, double residual, double tolerance, std::string context) {
        check_status st = residual <= tolerance ? check_status::pass : check_status::fail;
        entries.push_back({std::move(name), st, residual, tolerance, std::move(context)});
    }

    void add_failure(std::string name, std::string context) {
        entries.push_back({std::move(name), check_status::fail,
                           std::numeric_limits<double>::infinity(), 0.0, std::move(context)});
    }

    void add_skip(std::string name, std::string context) {
        entries.push_back({std::move(name), check_status::skip, 0.0, 0.0, std::move(context)});
    }

    void sort_by_name() {
        std::stable_sort(entries.begin(), entries.end(),
                         [](const check_entry& a, const check_entry& b) { return a.name < b.name; });
    }

    bool overall_pass() const {
        return std::all_of(entries.begin(), entries.end(),
                           [](const check_entry& e) { return e.passed(); });
    }

    double max_residual() const {
        double m = 0.0;
        for (const auto& e : entries)
            if (e.status != check_status::skip) m = std::max(m, e.residual);
        return m;
    }
};

} // namespace dacs
