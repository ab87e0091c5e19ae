#pragma once

/**
 * @file operator_lab.hpp
 * @brief Finite-section checks on the shift operator, driven by monomial
 * Gram matrices: hyperexpansivity forms, defect matrices, numerical rank and
 * the rank-one defect of the shift on H(b).
 */

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include <json.hpp>

#include "dbr/debranges.hpp"
#include "dbr/matrix.hpp"

namespace dbr {

/// Outcome of one numerical check. `witness` is the quantity compared with
/// `tolerance` (an extremal eigenvalue, a deviation, a residual).
struct Certificate {
    std::string kind;
    bool pass = false;
    double witness = 0.0;
    double tolerance = 0.0;
    nlohmann::ordered_json context = nlohmann::ordered_json::object();
};

/// Compression of sum_i (-1)^i C(n,i) T*^i T^i to span{1, ..., z^(size-1)}.
struct HermitianForm {
    CMatrix entries;
    int order = 1;
};

inline constexpr int kMaxBinomialOrder = 60;

/// C(n, k) for n <= 60, exact in 64-bit integers.
inline std::uint64_t binomial(int n, int k) {
    static const auto table = [] {
        std::array<std::array<std::uint64_t, kMaxBinomialOrder + 1>, kMaxBinomialOrder + 1> t{};
        for (int i = 0; i <= kMaxBinomialOrder; ++i) {
            t[i][0] = t[i][i] = 1;
            for (int j = 1; j < i; ++j) t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
        }
        return t;
    }();
    if (n < 0 || n > kMaxBinomialOrder) throw std::out_of_range("binomial order out of range");
    if (k < 0 || k > n) return 0;
    return table[n][k];
}

/**
 * @brief B_n(j, k) = sum_{i=0}^{n} (-1)^i C(n,i) G(k+i, j+i).
 *
 * This orientation makes h* B_n h equal <(sum ...) h, h> for h with
 * coefficient vector in the first (N - n) monomials.
 */
inline HermitianForm hyperexpansive_form(const GramMatrix& g, int n) {
    const auto N = g.size();
    if (n < 1) throw std::invalid_argument("form order must be >= 1");
    if (n >= N) throw std::invalid_argument("form order " + std::to_string(n) + " needs a Gram matrix larger than " +
                                            std::to_string(N));
    const Eigen::Index K = N - n;
    CMatrix b = CMatrix::Zero(K, K);
    for (int i = 0; i <= n; ++i) {
        const double coef = (i % 2 == 0 ? 1.0 : -1.0) * static_cast<double>(binomial(n, i));
        b += coef * g.entries.block(i, i, K, K).transpose();
    }
    return HermitianForm{std::move(b), n};
}

/// Passes when the largest eigenvalue of B is at most tol.
inline Certificate certify_nsd(const HermitianForm& b, double tol) {
    Certificate c;
    c.kind = "nsd";
    c.tolerance = tol;
    const RVector ev = hermitian_eigenvalues(b.entries);
    c.witness = ev.size() == 0 ? 0.0 : ev(ev.size() - 1);
    c.pass = c.witness <= tol;
    c.context["order"] = b.order;
    c.context["size"] = b.entries.rows();
    c.context["min_eigenvalue"] = ev.size() == 0 ? 0.0 : ev(0);
    return c;
}

/// D(n, m) = G(n+1, m+1) - G(n, m), the defect T*T - I in the monomial basis.
inline CMatrix defect_matrix(const GramMatrix& g) {
    const auto N = g.size();
    if (N < 2) throw std::invalid_argument("defect_matrix needs a Gram matrix of size >= 2");
    return g.entries.block(1, 1, N - 1, N - 1) - g.entries.block(0, 0, N - 1, N - 1);
}

inline RVector singular_values(const CMatrix& m) {
    if (m.size() == 0) return RVector{};
    Eigen::JacobiSVD<CMatrix> svd(m);
    return svd.singularValues();
}

/// Count of singular values above tau * sigma_1.
inline int numerical_rank(const CMatrix& m, double tau) {
    if (!(tau > 0.0 && tau < 1.0)) throw std::invalid_argument("rank threshold must lie in (0, 1)");
    const RVector s = singular_values(m);
    if (s.size() == 0 || s(0) == 0.0) return 0;
    int r = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i)
        if (s(i) > tau * s(0)) ++r;
    return r;
}

/**
 * @brief Checks B_n = r^(n-2) B_2 for 3 <= n <= n_max, r = 1 - |sigma/rho|^2.
 *
 * All forms are compared on the common leading block of size N - n_max.
 * Deviation is ||B_n - r^(n-2) B_2||_F / max(1, ||B_2||_F).
 */
inline Certificate ratio_identity_check(const GramMatrix& g, const PythagoreanPair& pair, int n_max,
                                        double tol = 1e-8) {
    if (n_max < 3) throw std::invalid_argument("ratio identity needs n_max >= 3");
    if (n_max >= g.size())
        throw std::invalid_argument("Gram matrix of size " + std::to_string(g.size()) + " is too small for n_max " +
                                    std::to_string(n_max));
    const Eigen::Index K = g.size() - n_max;
    const double r = pair.ratio_factor();
    const CMatrix b2 = hyperexpansive_form(g, 2).entries.topLeftCorner(K, K);
    const double scale = std::max(1.0, b2.norm());
    double worst = 0.0;
    nlohmann::ordered_json per_order = nlohmann::ordered_json::array();
    for (int n = 3; n <= n_max; ++n) {
        const CMatrix bn = hyperexpansive_form(g, n).entries.topLeftCorner(K, K);
        const double dev = (bn - std::pow(r, n - 2) * b2).norm() / scale;
        per_order.push_back(dev);
        worst = std::max(worst, dev);
    }
    Certificate c;
    c.kind = "ratio_identity";
    c.witness = worst;
    c.tolerance = tol;
    c.pass = worst <= tol;
    c.context["r"] = r;
    c.context["n_max"] = n_max;
    c.context["block"] = K;
    c.context["deviation_by_order"] = per_order;
    return c;
}

/// Largest eigenvalue of the pencil (d, g), g Hermitian positive definite.
inline double largest_generalized_eigenvalue(const CMatrix& d, const CMatrix& g) {
    const CMatrix dh = 0.5 * (d + d.adjoint());
    const CMatrix gh = 0.5 * (g + g.adjoint());
    Eigen::GeneralizedSelfAdjointEigenSolver<CMatrix> es(dh, gh, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw std::runtime_error("generalized eigensolver failed");
    return es.eigenvalues()(es.eigenvalues().size() - 1);
}

/**
 * @brief Rank-one structure of T*T - I on H(b).
 *
 * Two routes to the nonzero eigenvalue: the pencil (D, G) built from the Gram
 * matrix, and the closed expression rho^-2 ||S*b||_b^2. The defect must also
 * have numerical rank one. A symbol with S*b = 0 (constant b) is reported as
 * the degenerate rank-zero case.
 */
inline Certificate rank1_defect_check(const GramMatrix& g, const PythagoreanPair& pair, double tol = 1e-8,
                                      double rank_tau = 1e-8) {
    const CMatrix d = defect_matrix(g);
    const int rank = numerical_rank(d, rank_tau);
    const ComplexPoly sb = pair.b().backward_shift();
    const double expected = hb_norm_sq(sb, pair) / (pair.rho() * pair.rho());

    Certificate c;
    c.kind = "rank1_defect";
    c.tolerance = tol;
    c.context["rank"] = rank;
    c.context["expected_eigenvalue"] = expected;
    if (sb.is_zero()) {
        c.context["degenerate"] = true;
        c.witness = max_abs_entry(d);
        c.pass = rank == 0;
        return c;
    }
    const auto K = d.rows();
    const double got = largest_generalized_eigenvalue(d, g.entries.topLeftCorner(K, K));
    c.context["degenerate"] = false;
    c.context["eigenvalue"] = got;
    c.witness = std::abs(got - expected) / std::abs(expected);
    c.pass = rank == 1 && c.witness <= tol;
    return c;
}

}  // namespace dbr
