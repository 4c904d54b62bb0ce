#pragma once

#include <stdexcept>
#include <string>

namespace dacs {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// No unitary lowest-weight representation: c - g(h0+n) went negative
// before any zero crossing.
struct unitarity_violation : error {
    int level;
    explicit unitarity_violation(int n, double value)
        : error("unitarity violation: c - g(h0+" + std::to_string(n) +
                ") = " + std::to_string(value) + " < 0"),
          level(n) {}
};

// Canonical conjugate requested on a finite-dimensional (compact) rep,
// where F(C,H) diverges on the highest state.
struct compact_rep_error : error {
    compact_rep_error()
        : error("canonical conjugate is not defined on a finite-dimensional representation") {}
};

struct degenerate_denominator : error {
    int level;
    explicit degenerate_denominator(int n)
        : error("degenerate denominator c - g(h0+" + std::to_string(n) + "-1) ~ 0"),
          level(n) {}
};

// State (or operator) cannot be represented faithfully at this truncation.
struct truncation_error : error {
    double tail_mass;
    explicit truncation_error(double tail, double ceiling)
        : error("truncation tail mass " + std::to_string(tail) +
                " exceeds ceiling " + std::to_string(ceiling)),
          tail_mass(tail) {}
    explicit truncation_error(const std::string& what, double tail)
        : error(what), tail_mass(tail) {}
};

struct dimension_mismatch : error {
    dimension_mismatch(long a, long b)
        : error("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

struct overflow_error : error {
    using error::error;
};

// Invalid algebra parameters or malformed run configuration.
struct config_error : error {
    using error::error;
};

} // namespace dacs
