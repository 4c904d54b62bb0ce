#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "dacs/errors.hpp"
#include "dacs/report.hpp"

namespace dacs {

enum class algebra_kind { su11, quadratic, higgs, q_deformed };

inline const char* to_string(algebra_kind k) {
    switch (k) {
        case algebra_kind::su11: return "su11";
        case algebra_kind::quadratic: return "quadratic";
        case algebra_kind::higgs: return "higgs";
        default: return "qdeformed";
    }
}

// A deformed algebra in the Cartan-Weyl presentation
//
//   [H, E±] = ±E±,   [E+, E-] = f(H),
//
// specified by its structure function f and the potential g with
// f(h) = g(h) - g(h-1).  g's additive constant is pinned to one fixed form
// per algebra so that derived constants (Casimir values, alpha) are
// reproducible:
//
//   su(1,1):    f = -2h,             g = -h(h+1)
//   quadratic:  f = 2h + a h^2,      g = h(h+1) + (a/3) h(h+1)(h+1/2)
//   higgs:      f = 2c h + 4p h^3,   g = c h(h+1) + p h^2(h+1)^2
//   q-deformed: f = (q^h - q^-h)/(q - 1/q),
//               g = (q^(h+1/2) + q^-(h+1/2)) / ((q^(1/2) - q^(-1/2))(q - 1/q))
struct algebra_spec {
    algebra_kind kind = algebra_kind::su11;
    double a = 0.0;        // quadratic deformation strength
    double c_param = 1.0;  // higgs linear coefficient
    double h_param = 0.0;  // higgs cubic coefficient (curvature)
    double q = 2.0;        // q-deformation, real, q > 0, q != 1

    static algebra_spec su11() { return {algebra_kind::su11, 0, 1, 0, 2}; }
    static algebra_spec quadratic(double a) { return {algebra_kind::quadratic, a, 1, 0, 2}; }
    static algebra_spec higgs(double c, double p) { return {algebra_kind::higgs, 0, c, p, 2}; }
    static algebra_spec q_deformed(double q) { return {algebra_kind::q_deformed, 0, 1, 0, q}; }

    void validate() const {
        auto finite = [](double x) { return std::isfinite(x); };
        switch (kind) {
            case algebra_kind::quadratic:
                if (!finite(a)) throw config_error("quadratic: parameter a must be finite");
                break;
            case algebra_kind::higgs:
                if (!finite(c_param) || !finite(h_param))
                    throw config_error("higgs: parameters c, h must be finite");
                break;
            case algebra_kind::q_deformed:
                if (!finite(q) || q <= 0.0)
                    throw config_error("qdeformed: q must be a finite real > 0");
                if (std::abs(q - 1.0) <= 1e-12)
                    throw config_error("qdeformed: q = 1 is the undeformed limit, not a member");
                break;
            default:
                break;
        }
    }

    std::string name() const {
        std::string s = to_string(kind);
        switch (kind) {
            case algebra_kind::quadratic: return s + "(a=" + std::to_string(a) + ")";
            case algebra_kind::higgs:
                return s + "(c=" + std::to_string(c_param) + " h=" + std::to_string(h_param) + ")";
            case algebra_kind::q_deformed: return s + "(q=" + std::to_string(q) + ")";
            default: return s;
        }
    }
};

// f evaluated at an H-eigenvalue, sign conventions exactly as printed per
// algebra (su(1,1) has [E+,E-] = -2H while quadratic has +2H + aH^2).
inline double structure_f(const algebra_spec& spec, double h) {
    switch (spec.kind) {
        case algebra_kind::su11:
            return -2.0 * h;
        case algebra_kind::quadratic:
            return 2.0 * h + spec.a * h * h;
        case algebra_kind::higgs:
            return 2.0 * spec.c_param * h + 4.0 * spec.h_param * h * h * h;
        default: {
            // q-powers via exp(h ln q); real q > 0 only, no branch cuts
            const double lq = std::log(spec.q);
            return (std::exp(h * lq) - std::exp(-h * lq)) / (spec.q - 1.0 / spec.q);
        }
    }
}

inline double structure_g(const algebra_spec& spec, double h) {
    switch (spec.kind) {
        case algebra_kind::su11:
            return -h * (h + 1.0);
        case algebra_kind::quadratic:
            return h * (h + 1.0) + (spec.a / 3.0) * h * (h + 1.0) * (h + 0.5);
        case algebra_kind::higgs:
            return spec.c_param * h * (h + 1.0) +
                   spec.h_param * h * h * (h + 1.0) * (h + 1.0);
        default: {
            const double lq = std::log(spec.q);
            const double num = std::exp((h + 0.5) * lq) + std::exp(-(h + 0.5) * lq);
            const double den = (std::exp(0.5 * lq) - std::exp(-0.5 * lq)) * (spec.q - 1.0 / spec.q);
            return num / den;
        }
    }
}

// On a vacuum annihilated by E-, C = E+E- + g(H-1) gives c = g(h0 - 1).
inline double casimir_lowest_weight(const algebra_spec& spec, double h0) {
    return structure_g(spec, h0 - 1.0);
}

// Integers and half-integers in [-8, 8]; covers all weights reachable by
// desk-scale truncations.
inline std::vector<double> default_probe_grid() {
    std::vector<double> grid;
    grid.reserve(33);
    for (int k = -16; k <= 16; ++k) grid.push_back(0.5 * k);
    return grid;
}

// Checks the defining relation f(h) = g(h) - g(h-1) over a probe grid.
// The report carries the max deviation as a single summary entry.
inline verification_report check_fg_consistency(const algebra_spec& spec,
                                                const std::vector<double>& h_values,
                                                double tol) {
    double max_dev = 0.0;
    for (double h : h_values) {
        const double dev =
            std::abs(structure_f(spec, h) - (structure_g(spec, h) - structure_g(spec, h - 1.0)));
        max_dev = std::max(max_dev, dev);
    }
    verification_report report;
    report.add("fg_consistency", max_dev, tol,
               spec.name() + " grid_size=" + std::to_string(h_values.size()));
    return report;
}

} // namespace dacs
