#pragma once

/**
 * @file dirichlet.hpp
 * @brief Dirichlet-type spaces D(mu) for finitely atomic measures on the
 * closed unit disk.
 *
 * For mu = sum_i c_i delta_{zeta_i} the norm is
 *
 *     ||f||^2 = ||f||_{H^2}^2 + sum_i c_i D_{zeta_i}(f),
 *     D_zeta(f) = || (f - f(zeta)) / (z - zeta) ||_{H^2}^2.
 */

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dbr/hardy.hpp"
#include "dbr/matrix.hpp"

namespace dbr {

struct Atom {
    DiskPoint location;
    double weight;
};

/**
 * @brief mu = sum_i c_i delta_{zeta_i} with c_i > 0 and distinct zeta_i.
 *
 * The empty measure is allowed and gives D(0) = H^2. Duplicate locations are
 * rejected rather than merged.
 */
class PointMassMeasure {
public:
    PointMassMeasure() = default;

    explicit PointMassMeasure(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
        for (std::size_t i = 0; i < atoms_.size(); ++i) {
            const double w = atoms_[i].weight;
            if (!(w > 0.0) || !std::isfinite(w))
                throw std::invalid_argument("atom " + std::to_string(i) + " has non-positive weight");
            for (std::size_t j = 0; j < i; ++j)
                if (atoms_[j].location.value() == atoms_[i].location.value())
                    throw std::invalid_argument("duplicate atom location at index " + std::to_string(i));
        }
    }

    /// |alpha|^2 delta_lambda; alpha = 0 gives the zero measure.
    static PointMassMeasure single(Complex alpha, Complex lambda) {
        const DiskPoint where(lambda);
        if (std::norm(alpha) == 0.0) return {};
        return PointMassMeasure({Atom{where, std::norm(alpha)}});
    }

    const std::vector<Atom>& atoms() const noexcept { return atoms_; }
    std::size_t size() const noexcept { return atoms_.size(); }
    bool empty() const noexcept { return atoms_.empty(); }

    double total_mass() const noexcept {
        double s = 0.0;
        for (const auto& a : atoms_) s += a.weight;
        return s;
    }

    PointMassMeasure with_atom(Atom a) const {
        auto v = atoms_;
        v.push_back(a);
        return PointMassMeasure(std::move(v));
    }

private:
    std::vector<Atom> atoms_;
};

/// D_zeta(f)
inline double local_dirichlet(const ComplexPoly& f, const DiskPoint& zeta) {
    return h2_norm_sq(difference_quotient(f, zeta));
}

/// D_mu(f) = sum_i c_i D_{zeta_i}(f)
inline double dirichlet_integral(const ComplexPoly& f, const PointMassMeasure& mu) {
    double s = 0.0;
    for (const auto& a : mu.atoms()) s += a.weight * local_dirichlet(f, a.location);
    return s;
}

/// Polarized D(mu) inner product.
inline Complex dmu_inner(const ComplexPoly& f, const ComplexPoly& g, const PointMassMeasure& mu) {
    Complex s = h2_inner(f, g);
    for (const auto& a : mu.atoms())
        s += a.weight * h2_inner(difference_quotient(f, a.location), difference_quotient(g, a.location));
    return s;
}

/**
 * @brief Monomial Gram matrix of D(mu), size n x n.
 *
 * Per atom, the difference quotients q_k of z^k satisfy q_{k+1} = z q_k + zeta^k,
 * so P(k+1, l+1) = P(k, l) + zeta^k conj(zeta)^l with P(0, .) = 0. This fills
 * each atom's contribution in O(n^2).
 */
inline GramMatrix dmu_gram(const PointMassMeasure& mu, std::size_t n) {
    if (n == 0) throw std::invalid_argument("dmu_gram requires n >= 1");
    const auto N = static_cast<Eigen::Index>(n);
    CMatrix g = CMatrix::Identity(N, N);
    std::vector<Complex> pw(n);
    for (const auto& a : mu.atoms()) {
        const Complex z = a.location.value();
        pw[0] = 1.0;
        for (std::size_t k = 1; k < n; ++k) pw[k] = pw[k - 1] * z;
        CMatrix p = CMatrix::Zero(N, N);
        for (Eigen::Index k = 1; k < N; ++k)
            for (Eigen::Index l = 1; l < N; ++l) p(k, l) = p(k - 1, l - 1) + pw[k - 1] * std::conj(pw[l - 1]);
        g += a.weight * p;
    }
    return GramMatrix{"D(mu)", std::move(g)};
}

/// M(n, m) = sum_i c_i zeta_i^n conj(zeta_i)^m, size n x n.
inline CMatrix moment_matrix(const PointMassMeasure& mu, std::size_t n) {
    if (n == 0) throw std::invalid_argument("moment_matrix requires n >= 1");
    const auto N = static_cast<Eigen::Index>(n);
    CMatrix m = CMatrix::Zero(N, N);
    CVector v(N);
    for (const auto& a : mu.atoms()) {
        v(0) = 1.0;
        for (Eigen::Index k = 1; k < N; ++k) v(k) = v(k - 1) * a.location.value();
        m += a.weight * (v * v.adjoint());
    }
    return m;
}

/// Closed form of D_mu(k_w) for mu = |alpha|^2 delta_lambda.
inline double dmu_cauchy_norm(Complex alpha, const DiskPoint& lambda, Complex w) {
    const double w2 = std::norm(w);
    if (!(w2 < 1.0)) throw std::invalid_argument("dmu_cauchy_norm requires |w| < 1");
    const double den = std::norm(1.0 - std::conj(lambda.value()) * w) * (1.0 - w2);
    return std::norm(alpha) * w2 / den;
}

}  // namespace dbr
