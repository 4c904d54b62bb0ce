#pragma once

#include <cmath>
#include <complex>

#include "dacs/conjugate.hpp"
#include "dacs/expm.hpp"
#include "dacs/representation.hpp"

namespace dacs {

enum class cs_family { aocs, dual, perelomov };

inline const char* to_string(cs_family f) {
    switch (f) {
        case cs_family::aocs: return "aocs";
        case cs_family::dual: return "dual";
        default: return "perelomov";
    }
}

// Single truncation-quality gate for all state constructions.
inline constexpr double default_tail_ceiling = 1e-8;

// Coefficient vector in the weight basis of the source representation.
// tail_mass = |last two coefficients|^2 / norm^2; constructions always
// report it.
struct coherent_state {
    cvector coeffs;
    cs_family family = cs_family::aocs;
    complexd parameter{0.0, 0.0};
    bool normalized = false;
    double tail_mass = 0.0;
};

namespace detail {

inline double tail_mass_of(const cvector& c) {
    const double n2 = c.squaredNorm();
    if (n2 == 0.0) return 0.0;
    const Eigen::Index d = c.size();
    double t = std::norm(c[d - 1]);
    if (d >= 2) t += std::norm(c[d - 2]);
    return t / n2;
}

inline coherent_state finish(cvector c, cs_family family, complexd parameter, bool normalize,
                             double tail_ceiling) {
    coherent_state state;
    state.tail_mass = tail_mass_of(c);
    if (state.tail_mass > tail_ceiling) throw truncation_error(state.tail_mass, tail_ceiling);
    if (normalize) c /= c.norm();
    state.coeffs = std::move(c);
    state.family = family;
    state.parameter = parameter;
    state.normalized = normalize;
    return state;
}

} // namespace detail

// Annihilation-operator eigenstate |beta> = exp(beta Etilde+) |vac>, with
// E-|beta> = beta |beta>.  The ladder series closes to
// c_n = beta^n / prod_{k<n} sqrt(c - g(h0+k)), c_0 = 1.
inline coherent_state aocs(const conjugate_pair& pair, complexd beta, bool normalize,
                           double tail_ceiling = default_tail_ceiling) {
    const representation& rep = pair.rep;
    cvector c(rep.dim);
    c[0] = 1.0;
    for (int n = 0; n < rep.dim - 1; ++n)
        c[n + 1] = c[n] * beta / std::sqrt(rep.ladder_weight(n));
    return detail::finish(std::move(c), cs_family::aocs, beta, normalize, tail_ceiling);
}

// Dual state |gamma> = exp(gamma E+) |vac>, eigenstate of Etilde+^dag;
// c_n = gamma^n/n! . prod_{k<n} sqrt(c - g(h0+k)).  The series grows much
// faster than the AOCS one, so the tail ceiling matters.
inline coherent_state dual_cs(const representation& rep, complexd gamma, bool normalize,
                              double tail_ceiling = default_tail_ceiling) {
    cvector c(rep.dim);
    c[0] = 1.0;
    for (int n = 0; n < rep.dim - 1; ++n)
        c[n + 1] = c[n] * gamma * std::sqrt(rep.ladder_weight(n)) / (n + 1.0);
    return detail::finish(std::move(c), cs_family::dual, gamma, normalize, tail_ceiling);
}

struct perelomov_options {
    // substitute the mapped lowering operator Ebar- for E- in the exponent
    bool use_mapped_pair = false;
    int b = 1;
    std::optional<double> epsilon{};
};

// Perelomov state U|vac>, U = exp(xi E+ - xi* E-).  With E- the exact
// adjoint of E+ the exponent is anti-Hermitian, so U is unitary at any
// truncation; leakage shows up only in the tail mass.  The mapped-pair
// variant exponentiates (xi E+ - xi* Ebar-), which is not anti-Hermitian in
// the weight basis; its state is normalized explicitly and the unitarity
// gate does not apply.
inline coherent_state perelomov_cs(const representation& rep, complexd xi,
                                   const perelomov_options& options = {}) {
    const cmatrix lowering =
        options.use_mapped_pair ? map_to_lie(rep, options.b, options.epsilon).ebar_minus.mat
                                : rep.eminus.mat;
    const cmatrix x = xi * rep.eplus.mat - std::conj(xi) * lowering;
    const cmatrix u = expm(x);

    if (!options.use_mapped_pair) {
        const Eigen::Index trust = rep.eplus.trust_rows;
        const double defect =
            max_abs_block(u.adjoint() * u - cmatrix::Identity(rep.dim, rep.dim), trust);
        if (defect > 1e-8)
            throw truncation_error("perelomov unitarity defect " + std::to_string(defect),
                                   defect);
    }

    coherent_state state;
    state.coeffs = u.col(0);
    if (options.use_mapped_pair) state.coeffs /= state.coeffs.norm();
    state.family = cs_family::perelomov;
    state.parameter = xi;
    state.normalized = true;
    state.tail_mass = detail::tail_mass_of(state.coeffs);
    return state;
}

// <state|op|state>; the state is expected to be normalized.
inline complexd expectation(const coherent_state& state, const operator_matrix& op) {
    if (state.coeffs.size() != op.dim()) throw dimension_mismatch(state.coeffs.size(), op.dim());
    return (state.coeffs.adjoint() * op.mat * state.coeffs)(0);
}

} // namespace dacs
