#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>

#include "dacs/representation.hpp"

namespace dacs {

// Sector constant of F(C,H) = (H + alpha)/(c - g(H)), fixed by requiring
// [E-, Etilde+] |vac> = |vac>: since E+E-|vac> = 0 the condition reduces to
// F(c,h0)(c - g(h0)) = h0 + alpha = 1.
inline double solve_alpha(const algebra_spec& /*spec*/, double h0) {
    return 1.0 - h0;
}

// Canonical conjugate of the lowering operator:
//
//   Etilde+ = E+ . F(C,H),  F(C,H) = (H + alpha)/(c - g(H)),
//
// so <n+1|Etilde+|n> = (n+1)/sqrt(c - g(h0+n)) and [E-, Etilde+] = 1 on
// trusted rows.
struct conjugate_pair {
    representation rep;
    double alpha = 0.0;
    operator_matrix etilde_plus;
};

inline conjugate_pair conjugate_raising(const representation& rep) {
    // F diverges on the highest state of a compact rep
    if (rep.compact()) throw compact_rep_error();

    const double alpha = solve_alpha(rep.spec, rep.h0);
    cmatrix fdiag = cmatrix::Zero(rep.dim, rep.dim);
    for (int n = 0; n < rep.dim - 1; ++n) {
        const double w = rep.ladder_weight(n);
        if (w <= 0.0) throw unitarity_violation(n, w);
        fdiag(n, n) = (rep.h0 + n + alpha) / w;
    }
    // top column of E+ is zero, its F value never enters; keep it finite
    fdiag(rep.dim - 1, rep.dim - 1) = 0.0;

    conjugate_pair pair;
    pair.rep = rep;
    pair.alpha = alpha;
    pair.etilde_plus = {rep.eplus.mat * fdiag, rep.eplus.trust_rows};
    return pair;
}

// Adjoint of the conjugate raising operator; satisfies [Etilde+^dag, E+] = 1
// on trusted rows and lowers by one (strictly upper-bidiagonal).
inline operator_matrix dual_conjugate(const conjugate_pair& pair) {
    return {pair.etilde_plus.mat.adjoint(), pair.etilde_plus.trust_rows};
}

// The epsilon for which G's numerator vanishes together with its denominator
// on the vacuum (and, for finite chains, on the highest state).  Only with
// this value does the mapped bracket hold on the boundary rows; any other
// epsilon shifts the (0,0) entry by exactly (epsilon - epsilon*).
inline double default_lie_epsilon(double h0, int b) {
    return b * h0 * (1.0 - h0);
}

// Mapped undeformed lowering operator:
//
//   Ebar- = E- . G(C,H),  G(C,H) = ((H^2 - H) b + epsilon)/(c - g(H-1)),
//
// giving [E+, Ebar-] = -2bH on trusted rows away from the vacuum for any
// epsilon, and on every trusted row for the default epsilon.  b = +1 targets
// su(1,1), b = -1 su(2).
struct lie_map {
    representation rep;
    int b = 1;
    double epsilon = 0.0;
    operator_matrix ebar_minus;
};

inline lie_map map_to_lie(const representation& rep, int b,
                          std::optional<double> epsilon = std::nullopt) {
    if (b != 1 && b != -1) throw std::invalid_argument("map_to_lie: b must be +1 or -1");
    const double eps = epsilon.value_or(default_lie_epsilon(rep.h0, b));

    cmatrix gdiag = cmatrix::Zero(rep.dim, rep.dim);
    gdiag(0, 0) = 0.0; // multiplies E-'s zero vacuum column
    for (int n = 1; n < rep.dim; ++n) {
        const double den = rep.c - structure_g(rep.spec, rep.h0 + n - 1.0);
        if (std::abs(den) < 1e-12) throw degenerate_denominator(n);
        const double hn = rep.h0 + n;
        gdiag(n, n) = ((hn * hn - hn) * b + eps) / den;
    }

    lie_map map;
    map.rep = rep;
    map.b = b;
    map.epsilon = eps;
    map.ebar_minus = {rep.eminus.mat * gdiag, rep.eminus.trust_rows};
    return map;
}

} // namespace dacs
