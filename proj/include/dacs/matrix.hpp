#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <complex>

namespace dacs {

using complexd = std::complex<double>;
using cmatrix  = Eigen::MatrixXcd;
using cvector  = Eigen::VectorXcd;

// Dense complex operator on a truncated weight basis.  trust_rows counts the
// leading basis states on which the matrix action agrees with the
// untruncated operator; every residual check restricts to that block.
struct operator_matrix {
    cmatrix mat;
    Eigen::Index trust_rows = 0;

    Eigen::Index dim() const { return mat.rows(); }
};

inline cmatrix commutator(const cmatrix& a, const cmatrix& b) {
    return a * b - b * a;
}

inline double max_abs(const cmatrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

// max-entry norm over the leading k x k block
inline double max_abs_block(const cmatrix& m, Eigen::Index k) {
    k = std::min({k, m.rows(), m.cols()});
    if (k <= 0) return 0.0;
    return m.topLeftCorner(k, k).cwiseAbs().maxCoeff();
}

} // namespace dacs
