#pragma once

/**
 * @file moments.hpp
 * @brief Recovering mu = sum_i c_i delta_{zeta_i} from its moment matrix
 * M(n, m) = sum_i c_i zeta_i^n conj(zeta_i)^m.
 *
 * The column space of M is spanned by the Vandermonde vectors
 * (1, zeta, zeta^2, ...), so it is shift invariant: with U an orthonormal
 * basis of the dominant eigenspace, U[1:] = U[:-1] Phi and the eigenvalues of
 * Phi are the atoms. Weights then follow from a nonnegative least-squares fit.
 */

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dbr/dirichlet.hpp"
#include "dbr/matrix.hpp"
#include "dbr/operator_lab.hpp"

namespace dbr {

struct RecoveryResult {
    PointMassMeasure measure;
    double residual = 0.0;   ///< ||M - sum c_i v_i v_i*||_F
    double condition = 1.0;  ///< 2-norm condition number of the recovered Vandermonde matrix
};

/// Lawson-Hanson active-set solver for min ||A x - b|| subject to x >= 0.
inline Eigen::VectorXd nnls(const Eigen::MatrixXd& a, const Eigen::VectorXd& b, int max_iter = 500) {
    const Eigen::Index n = a.cols();
    Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
    std::vector<bool> passive(static_cast<std::size_t>(n), false);
    const double tol = 10.0 * std::numeric_limits<double>::epsilon() * a.norm() * std::max<Eigen::Index>(a.rows(), n);

    auto solve_passive = [&](Eigen::VectorXd& z) {
        std::vector<Eigen::Index> idx;
        for (Eigen::Index j = 0; j < n; ++j)
            if (passive[static_cast<std::size_t>(j)]) idx.push_back(j);
        Eigen::MatrixXd ap(a.rows(), static_cast<Eigen::Index>(idx.size()));
        for (std::size_t k = 0; k < idx.size(); ++k) ap.col(static_cast<Eigen::Index>(k)) = a.col(idx[k]);
        const Eigen::VectorXd zp = ap.colPivHouseholderQr().solve(b);
        z.setZero(n);
        for (std::size_t k = 0; k < idx.size(); ++k) z(idx[k]) = zp(static_cast<Eigen::Index>(k));
    };

    for (int it = 0; it < max_iter; ++it) {
        const Eigen::VectorXd w = a.transpose() * (b - a * x);
        Eigen::Index best = -1;
        double wmax = tol;
        for (Eigen::Index j = 0; j < n; ++j)
            if (!passive[static_cast<std::size_t>(j)] && w(j) > wmax) {
                wmax = w(j);
                best = j;
            }
        if (best < 0) break;
        passive[static_cast<std::size_t>(best)] = true;

        Eigen::VectorXd z;
        for (int inner = 0; inner < max_iter; ++inner) {
            solve_passive(z);
            bool feasible = true;
            for (Eigen::Index j = 0; j < n; ++j)
                if (passive[static_cast<std::size_t>(j)] && z(j) <= 0.0) feasible = false;
            if (feasible) break;
            double alpha = 1.0;
            for (Eigen::Index j = 0; j < n; ++j)
                if (passive[static_cast<std::size_t>(j)] && z(j) <= 0.0) alpha = std::min(alpha, x(j) / (x(j) - z(j)));
            x += alpha * (z - x);
            for (Eigen::Index j = 0; j < n; ++j)
                if (passive[static_cast<std::size_t>(j)] && std::abs(x(j)) <= tol) {
                    passive[static_cast<std::size_t>(j)] = false;
                    x(j) = 0.0;
                }
        }
        x = z;
    }
    return x;
}

namespace detail {

inline CMatrix vandermonde(const std::vector<Complex>& nodes, Eigen::Index rows) {
    CMatrix v(rows, static_cast<Eigen::Index>(nodes.size()));
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        Complex p = 1.0;
        for (Eigen::Index n = 0; n < rows; ++n) {
            v(n, static_cast<Eigen::Index>(i)) = p;
            p *= nodes[i];
        }
    }
    return v;
}

}  // namespace detail

/// Radial excursion beyond the circle that is still clamped back onto it.
inline constexpr double kClampSlack = 1e-8;

/**
 * @brief Invert the moment map.
 *
 * `k` is the atom count; std::nullopt selects it as numerical_rank(M, rank_tau).
 * Throws std::runtime_error when k exceeds the numerical rank, when a weight
 * comes out non-positive, or when an atom lands outside the closed disk.
 */
inline RecoveryResult recover_atoms(const CMatrix& m, std::optional<int> k = std::nullopt, double rank_tau = 1e-8) {
    if (m.rows() != m.cols()) throw std::invalid_argument("moment matrix must be square");
    const Eigen::Index N = m.rows();
    if (N == 0) throw std::invalid_argument("moment matrix is empty");
    const double scale = std::max(1.0, max_abs_entry(m));
    if (hermitian_defect(m) > 1e-10 * scale) throw std::invalid_argument("moment matrix is not Hermitian");

    const int rank = numerical_rank(m, rank_tau);
    const int atoms = k.value_or(rank);
    if (atoms < 0) throw std::invalid_argument("atom count must be nonnegative");
    if (atoms > rank)
        throw std::runtime_error("requested " + std::to_string(atoms) + " atoms but the numerical rank is " +
                                 std::to_string(rank));
    RecoveryResult out;
    if (atoms == 0) {
        out.residual = m.norm();
        return out;
    }
    if (N < atoms + 1)
        throw std::runtime_error("moment matrix of size " + std::to_string(N) + " cannot resolve " +
                                 std::to_string(atoms) + " atoms");

    const CMatrix h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
    // Eigenvalues are ascending; M is PSD so the dominant subspace is the tail.
    const CMatrix u = es.eigenvectors().rightCols(atoms);
    const CMatrix up = u.topRows(N - 1);
    const CMatrix down = u.bottomRows(N - 1);
    const CMatrix phi = up.completeOrthogonalDecomposition().solve(down);
    Eigen::ComplexEigenSolver<CMatrix> ces(phi, false);
    if (ces.info() != Eigen::Success) throw std::runtime_error("shift-invariance eigenproblem failed");

    std::vector<Complex> nodes;
    for (Eigen::Index i = 0; i < ces.eigenvalues().size(); ++i) {
        Complex z = ces.eigenvalues()(i);
        const double r = std::abs(z);
        if (r > 1.0 + kClampSlack)
            throw std::runtime_error("recovered atom with modulus " + std::to_string(r) + " lies outside the closed disk");
        if (r > 1.0) z /= r;
        nodes.push_back(z);
    }

    const CMatrix v = detail::vandermonde(nodes, N);
    const Eigen::Index cells = N * N;
    Eigen::MatrixXd a(2 * cells, atoms);
    Eigen::VectorXd rhs(2 * cells);
    for (int i = 0; i < atoms; ++i) {
        const CMatrix outer = v.col(i) * v.col(i).adjoint();
        for (Eigen::Index p = 0; p < cells; ++p) {
            a(p, i) = outer(p).real();
            a(cells + p, i) = outer(p).imag();
        }
    }
    for (Eigen::Index p = 0; p < cells; ++p) {
        rhs(p) = m(p).real();
        rhs(cells + p) = m(p).imag();
    }
    const Eigen::VectorXd w = nnls(a, rhs);

    std::vector<Atom> recovered;
    CMatrix rebuilt = CMatrix::Zero(N, N);
    for (int i = 0; i < atoms; ++i) {
        if (!(w(i) > 1e-12 * scale))
            throw std::runtime_error("recovered weight " + std::to_string(w(i)) + " is not positive");
        recovered.push_back(Atom{DiskPoint(nodes[static_cast<std::size_t>(i)]), w(i)});
        rebuilt += w(i) * (v.col(i) * v.col(i).adjoint());
    }
    out.measure = PointMassMeasure(std::move(recovered));
    out.residual = (m - rebuilt).norm();
    const RVector sv = singular_values(v);
    out.condition = sv(sv.size() - 1) > 0.0 ? sv(0) / sv(sv.size() - 1) : std::numeric_limits<double>::infinity();
    return out;
}

/**
 * @brief Greedy minimal-distance pairing of two measures.
 *
 * Atoms of `expected` are visited in decreasing weight order and each takes
 * the nearest unused atom of `got`. Returns the worst location and weight
 * errors, or nullopt when the atom counts differ.
 */
struct MatchReport {
    double location_error = 0.0;
    double weight_error = 0.0;
};

inline std::optional<MatchReport> match_measures(const PointMassMeasure& expected, const PointMassMeasure& got) {
    if (expected.size() != got.size()) return std::nullopt;
    std::vector<std::size_t> order(expected.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return expected.atoms()[x].weight > expected.atoms()[y].weight;
    });
    std::vector<bool> used(got.size(), false);
    MatchReport rep;
    for (auto i : order) {
        const auto& e = expected.atoms()[i];
        std::size_t best = 0;
        double dist = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < got.size(); ++j) {
            if (used[j]) continue;
            const double d = std::abs(got.atoms()[j].location.value() - e.location.value());
            if (d < dist) {
                dist = d;
                best = j;
            }
        }
        used[best] = true;
        rep.location_error = std::max(rep.location_error, dist);
        rep.weight_error = std::max(rep.weight_error, std::abs(got.atoms()[best].weight - e.weight));
    }
    return rep;
}

/// mu -> D(mu) Gram (size n+1) -> defect -> recovered measure, compared with mu.
inline Certificate roundtrip_check(const PointMassMeasure& mu, std::size_t n, double tol = 1e-8) {
    if (n < mu.size() + 1) throw std::invalid_argument("roundtrip needs n >= atom count + 1");
    Certificate c;
    c.kind = "recovery_roundtrip";
    c.tolerance = tol;
    c.context["atoms"] = mu.size();
    c.context["n"] = n;
    try {
        const auto rec = recover_atoms(defect_matrix(dmu_gram(mu, n + 1)));
        c.context["recovered_atoms"] = rec.measure.size();
        c.context["residual"] = rec.residual;
        c.context["condition"] = rec.condition;
        const auto match = match_measures(mu, rec.measure);
        if (!match) {
            c.witness = std::numeric_limits<double>::infinity();
            c.pass = false;
            return c;
        }
        c.context["location_error"] = match->location_error;
        c.context["weight_error"] = match->weight_error;
        c.witness = std::max(match->location_error, match->weight_error);
        c.pass = c.witness <= tol;
    } catch (const std::exception& e) {
        c.context["error"] = e.what();
        c.witness = std::numeric_limits<double>::infinity();
        c.pass = false;
    }
    return c;
}

}  // namespace dbr
