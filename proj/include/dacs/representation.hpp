#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "dacs/algebra.hpp"
#include "dacs/errors.hpp"
#include "dacs/matrix.hpp"

namespace dacs {

enum class rep_kind { infinite_truncated, finite_exact };

// Default tolerance for zero / sign detection in c - g(h0+n), matched to the
// double-precision scale of the polynomial evaluations.
inline constexpr double unitarity_tol = 1e-10;

// Truncated lowest-weight representation.  Basis |n>, n = 0..dim-1, with
// H|n> = (h0+n)|n>, vacuum annihilated by E-, and
//
//   <n+1|E+|n> = sqrt(c - g(h0+n)),   c = g(h0-1),   E- = E+^dagger.
//
// Raising elements are taken real non-negative (positive square root); the
// paper leaves phases free and this gauge makes the oscillator cross-check
// exact.  For infinite_truncated reps, single operator applications are
// exact on rows 0..dim-2; products of k operators are trusted on
// rows 0..dim-1-k.
struct representation {
    algebra_spec spec;
    double h0 = 0.0;
    double c = 0.0;
    int dim = 0;
    rep_kind kind = rep_kind::infinite_truncated;
    operator_matrix h;
    operator_matrix eplus;
    operator_matrix eminus;

    double weight(int n) const { return h0 + n; }
    bool compact() const { return kind == rep_kind::finite_exact; }

    // c - g(h0+n): squared raising element out of level n, the quantity whose
    // sign pattern decides unitarity and finiteness.
    double ladder_weight(int n) const {
        return c - structure_g(spec, h0 + n);
    }
};

enum class probe_verdict { infinite_up_to, finite, invalid_at };

struct rep_probe {
    probe_verdict verdict = probe_verdict::infinite_up_to;
    // infinite_up_to: the scanned bound; finite: the dimension; invalid_at:
    // the first level whose ladder weight is negative.
    int n = 0;
    std::optional<int> first_nonpositive;
};

// Scans the sign pattern of c - g(h0+n) for n = 0..max_n.
inline rep_probe probe_dimension(const algebra_spec& spec, double h0, int max_n,
                                 double tol = unitarity_tol) {
    if (max_n < 1) throw std::invalid_argument("probe_dimension: max_n must be >= 1");
    spec.validate();
    const double c = casimir_lowest_weight(spec, h0);
    for (int n = 0; n <= max_n; ++n) {
        const double w = c - structure_g(spec, h0 + n);
        if (std::abs(w) <= tol) return {probe_verdict::finite, n + 1, n};
        if (w < -tol) return {probe_verdict::invalid_at, n, n};
    }
    return {probe_verdict::infinite_up_to, max_n, std::nullopt};
}

// Builds the lowest-weight rep at truncation size dim.  If the ladder closes
// (c - g(h0+d-1) = 0 within tol for some d <= dim) the rep is finite_exact
// and the matrices are sized d; a negative ladder weight before any zero
// crossing throws unitarity_violation.
inline representation build_lowest_weight_rep(const algebra_spec& spec, double h0, int dim,
                                              double tol = unitarity_tol) {
    if (dim < 2) throw std::invalid_argument("build_lowest_weight_rep: dim must be >= 2");
    spec.validate();
    if (!std::isfinite(h0)) throw config_error("h0 must be finite");

    const double c = casimir_lowest_weight(spec, h0);

    int size = dim;
    rep_kind kind = rep_kind::infinite_truncated;
    std::vector<double> w(dim);
    for (int n = 0; n < dim; ++n) {
        w[n] = c - structure_g(spec, h0 + n);
        if (std::abs(w[n]) <= tol) {
            size = n + 1;
            kind = rep_kind::finite_exact;
            break;
        }
        if (n < dim - 1 && w[n] < -tol) throw unitarity_violation(n, w[n]);
    }
    if (size < 2)
        throw std::invalid_argument("build_lowest_weight_rep: ladder closes at dimension 1");

    representation rep;
    rep.spec = spec;
    rep.h0 = h0;
    rep.c = c;
    rep.dim = size;
    rep.kind = kind;

    const Eigen::Index trust = kind == rep_kind::finite_exact ? size : size - 1;
    cmatrix hmat = cmatrix::Zero(size, size);
    cmatrix ep = cmatrix::Zero(size, size);
    for (int n = 0; n < size; ++n) hmat(n, n) = h0 + n;
    for (int n = 0; n < size - 1; ++n) ep(n + 1, n) = std::sqrt(w[n]);

    rep.h = {hmat, trust};
    rep.eplus = {ep, trust};
    rep.eminus = {ep.adjoint(), trust};
    return rep;
}

enum class fock_sector { even, odd };

// One-oscillator realization of su(1,1): K- = a^2/2, K+ = (a^dag)^2/2,
// K0 = (2 a^dag a + 1)/4, projected onto the even (vacuum |0>) or odd
// (vacuum |1>) Fock sector and relabeled 0,1,2,...  Serves as an
// independent oracle for build_lowest_weight_rep(su11, 1/4 or 3/4).
inline representation oscillator_realization(fock_sector sector, int fock_dim) {
    if (fock_dim < 4 || fock_dim % 2 != 0)
        throw std::invalid_argument("oscillator_realization: fock_dim must be even and >= 4");

    cmatrix a = cmatrix::Zero(fock_dim, fock_dim);
    for (int k = 1; k < fock_dim; ++k) a(k - 1, k) = std::sqrt(static_cast<double>(k));
    const cmatrix adag = a.adjoint();

    const cmatrix kminus = 0.5 * a * a;
    const cmatrix kplus = 0.5 * adag * adag;
    const cmatrix kzero =
        0.25 * (2.0 * adag * a + cmatrix::Identity(fock_dim, fock_dim));

    const int offset = sector == fock_sector::even ? 0 : 1;
    const int sdim = fock_dim / 2;
    cmatrix h = cmatrix::Zero(sdim, sdim);
    cmatrix ep = cmatrix::Zero(sdim, sdim);
    cmatrix em = cmatrix::Zero(sdim, sdim);
    for (int i = 0; i < sdim; ++i)
        for (int j = 0; j < sdim; ++j) {
            h(i, j) = kzero(2 * i + offset, 2 * j + offset);
            ep(i, j) = kplus(2 * i + offset, 2 * j + offset);
            em(i, j) = kminus(2 * i + offset, 2 * j + offset);
        }

    representation rep;
    rep.spec = algebra_spec::su11();
    rep.h0 = sector == fock_sector::even ? 0.25 : 0.75;
    rep.c = casimir_lowest_weight(rep.spec, rep.h0); // 3/16 in both sectors
    rep.dim = sdim;
    rep.kind = rep_kind::infinite_truncated;
    const Eigen::Index trust = sdim - 1;
    rep.h = {h, trust};
    rep.eplus = {ep, trust};
    rep.eminus = {em, trust};
    return rep;
}

// C = E-E+ + g(H); equals c * Identity on trusted rows (all rows for
// finite_exact reps).
inline operator_matrix casimir_matrix(const representation& rep) {
    cmatrix g = cmatrix::Zero(rep.dim, rep.dim);
    for (int n = 0; n < rep.dim; ++n) g(n, n) = structure_g(rep.spec, rep.h0 + n);
    cmatrix cas = rep.eminus.mat * rep.eplus.mat + g;
    const Eigen::Index trust = rep.compact() ? rep.dim : rep.dim - 1;
    return {std::move(cas), trust};
}

} // namespace dacs
