#pragma once

#include <cmath>
#include <stdexcept>

#include "dacs/errors.hpp"
#include "dacs/matrix.hpp"

namespace dacs {

// Largest 1-norm accepted by matrix_exponential.  The backward-error
// contract (<= 1e-12) targets ||A|| <= 50; scaling-and-squaring stays
// accurate well past that, so the hard ceiling is generous.
inline constexpr double expm_max_norm = 1e4;

namespace detail {

inline void pade3(const cmatrix& a, cmatrix& u, cmatrix& v) {
    const double b[] = {120., 60., 12., 1.};
    const cmatrix a2 = a * a;
    const cmatrix id = cmatrix::Identity(a.rows(), a.cols());
    u.noalias() = a * (b[3] * a2 + b[1] * id);
    v = b[2] * a2 + b[0] * id;
}

inline void pade5(const cmatrix& a, cmatrix& u, cmatrix& v) {
    const double b[] = {30240., 15120., 3360., 420., 30., 1.};
    const cmatrix a2 = a * a;
    const cmatrix a4 = a2 * a2;
    const cmatrix id = cmatrix::Identity(a.rows(), a.cols());
    u.noalias() = a * (b[5] * a4 + b[3] * a2 + b[1] * id);
    v = b[4] * a4 + b[2] * a2 + b[0] * id;
}

inline void pade7(const cmatrix& a, cmatrix& u, cmatrix& v) {
    const double b[] = {17297280., 8648640., 1995840., 277200., 25200., 1512., 56., 1.};
    const cmatrix a2 = a * a;
    const cmatrix a4 = a2 * a2;
    const cmatrix a6 = a4 * a2;
    const cmatrix id = cmatrix::Identity(a.rows(), a.cols());
    u.noalias() = a * (b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * id);
    v = b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * id;
}

inline void pade9(const cmatrix& a, cmatrix& u, cmatrix& v) {
    const double b[] = {17643225600., 8821612800., 2075673600., 302702400., 30270240.,
                        2162160.,     110880.,     3960.,       90.,        1.};
    const cmatrix a2 = a * a;
    const cmatrix a4 = a2 * a2;
    const cmatrix a6 = a4 * a2;
    const cmatrix a8 = a6 * a2;
    const cmatrix id = cmatrix::Identity(a.rows(), a.cols());
    u.noalias() = a * (b[9] * a8 + b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * id);
    v = b[8] * a8 + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * id;
}

inline void pade13(const cmatrix& a, cmatrix& u, cmatrix& v) {
    const double b[] = {64764752532480000., 32382376266240000., 7771770303897600.,
                        1187353796428800.,  129060195264000.,   10559470521600.,
                        670442572800.,      33522128640.,       1323241920.,
                        40840800.,          960960.,            16380.,
                        182.,               1.};
    const cmatrix a2 = a * a;
    const cmatrix a4 = a2 * a2;
    const cmatrix a6 = a4 * a2;
    const cmatrix id = cmatrix::Identity(a.rows(), a.cols());
    cmatrix tmp = a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2);
    tmp += b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * id;
    u.noalias() = a * tmp;
    v.noalias() = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2);
    v += b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * id;
}

} // namespace detail

// exp(A) by Pade approximants with scaling and squaring (Higham's degree
// switching thresholds).  Throws overflow_error for ||A||_1 beyond
// expm_max_norm, invalid_argument for non-finite entries.
inline cmatrix expm(const cmatrix& a) {
    if (!a.allFinite()) throw std::invalid_argument("expm: non-finite entries");
    if (a.rows() != a.cols()) throw dimension_mismatch(a.rows(), a.cols());

    const double l1norm = a.size() == 0 ? 0.0 : a.cwiseAbs().colwise().sum().maxCoeff();
    if (l1norm > expm_max_norm)
        throw overflow_error("expm: ||A||_1 = " + std::to_string(l1norm) +
                             " beyond supported range " + std::to_string(expm_max_norm));

    cmatrix u, v;
    int squarings = 0;
    if (l1norm < 1.495585217958292e-2) {
        detail::pade3(a, u, v);
    } else if (l1norm < 2.539398330063230e-1) {
        detail::pade5(a, u, v);
    } else if (l1norm < 9.504178996162932e-1) {
        detail::pade7(a, u, v);
    } else if (l1norm < 2.097847961257068e0) {
        detail::pade9(a, u, v);
    } else {
        const double theta13 = 5.371920351148152;
        std::frexp(l1norm / theta13, &squarings);
        if (squarings < 0) squarings = 0;
        const cmatrix scaled = a * std::ldexp(1.0, -squarings);
        detail::pade13(scaled, u, v);
    }

    // Pade approximant is (V+U)(V-U)^{-1}
    cmatrix result = (v - u).partialPivLu().solve(v + u);
    for (int i = 0; i < squarings; ++i) result = result * result;
    return result;
}

inline operator_matrix matrix_exponential(const operator_matrix& a) {
    return {expm(a.mat), a.trust_rows};
}

} // namespace dacs
