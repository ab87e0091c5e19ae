#pragma once

#include <Eigen/Dense>

#include <string>
#include <utility>

#include "dbr/hardy.hpp"

namespace dbr {

using CMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;
using CVector = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;
using RVector = Eigen::VectorXd;

/**
 * @brief Monomial Gram matrix G(n, m) = <z^n, z^m> in a named inner product.
 *
 * `space` records which inner product produced the entries ("H2", "D(mu)",
 * "H(b)"); it only travels along for reporting.
 */
struct GramMatrix {
    std::string space;
    CMatrix entries;

    Eigen::Index size() const noexcept { return entries.rows(); }
    Complex operator()(Eigen::Index n, Eigen::Index m) const { return entries(n, m); }
};

inline double hermitian_defect(const CMatrix& m) {
    return m.rows() == 0 ? 0.0 : (m - m.adjoint()).cwiseAbs().maxCoeff();
}

inline double max_abs_entry(const CMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

/// Eigenvalues (ascending) of the Hermitian part of m.
inline RVector hermitian_eigenvalues(const CMatrix& m) {
    if (m.rows() == 0) return RVector{};
    const CMatrix h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<CMatrix> es(h, Eigen::EigenvaluesOnly);
    return es.eigenvalues();
}

}  // namespace dbr
