#pragma once

#include <Eigen/Dense>

#include <complex>

namespace dcalc::detail {

using ComplexMatrix = Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic>;
using ComplexVector = Eigen::Matrix<std::complex<double>, Eigen::Dynamic, 1>;

/// Determinant by LU with partial pivoting.
inline std::complex<double> determinant(const ComplexMatrix& m) {
    if (m.rows() == 0) return 1.0;
    return Eigen::PartialPivLU<ComplexMatrix>(m).determinant();
}

/// Geometric mean of the column 2-norms; the scale for singularity thresholds.
inline double column_norm_scale(const ComplexMatrix& m) {
    double log_sum = 0.0;
    for (Eigen::Index i = 0; i < m.cols(); ++i) {
        const double norm = m.col(i).norm();
        if (norm == 0.0) return 0.0;
        log_sum += std::log(norm);
    }
    return std::exp(log_sum / static_cast<double>(m.cols()));
}

}  // namespace dcalc::detail
