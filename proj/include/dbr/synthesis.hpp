#pragma once

/**
 * @file synthesis.hpp
 * @brief The correspondence mu = |alpha|^2 delta_lambda <-> b(z) = A z / (1 - B z)
 * under which D(mu) = H(b) with equal norms.
 */

#include <cmath>
#include <stdexcept>
#include <string>

#include "dbr/debranges.hpp"
#include "dbr/dirichlet.hpp"
#include "dbr/operator_lab.hpp"

namespace dbr {

struct SynthesisInput {
    Complex alpha;
    DiskPoint lambda;
};

/// A real and nonnegative; b is fixed only up to a unimodular factor, which
/// does not change the H(b) norm.
struct SynthesisOutput {
    double A = 0.0;
    Complex B{};

    MoebiusSymbol symbol() const { return MoebiusSymbol(0.0, A, B); }
};

/**
 * @brief Symbol coefficients for mu = |alpha|^2 delta_lambda.
 *
 * With S = 1 + |alpha|^2 + |lambda|^2, the admissible (minus) root is
 *
 *     A^2 = |alpha|^2 / (2|lambda|^2) (S - sqrt(S^2 - 4|lambda|^2))
 *         = 2|alpha|^2 / (S + sqrt(S^2 - 4|lambda|^2)),
 *     B   = A^2 conj(lambda) / |alpha|^2.
 *
 * The second form has no cancellation near lambda = 0 and at lambda = 0
 * gives A^2 = |alpha|^2 / (1 + |alpha|^2), B = 0. alpha = 0 gives b = 0.
 */
inline SynthesisOutput synthesize_symbol(const SynthesisInput& in) {
    const double a2 = std::norm(in.alpha);
    if (a2 == 0.0) return {};
    const Complex lam = in.lambda.value();
    const double l2 = std::norm(lam);
    const double S = 1.0 + a2 + l2;
    const double root = std::sqrt(std::max(0.0, S * S - 4.0 * l2));
    const double A2 = 2.0 * a2 / (S + root);
    SynthesisOutput out;
    out.A = std::sqrt(A2);
    out.B = (2.0 / (S + root)) * std::conj(lam);
    return out;
}

/// Builds both spaces for (alpha, lambda) and compares their n x n monomial Grams.
inline Certificate verify_norm_equality(const SynthesisInput& in, std::size_t n, double tol = 1e-9) {
    if (n < 2) throw std::invalid_argument("norm equality check needs n >= 2");
    const auto mu = PointMassMeasure::single(in.alpha, in.lambda.value());
    const auto out = synthesize_symbol(in);
    const auto pair = pythagorean_mate(out.symbol());
    const GramMatrix gd = dmu_gram(mu, n);
    const GramMatrix gb = hb_gram(pair, n);
    Certificate c;
    c.kind = "norm_equality";
    c.tolerance = tol;
    c.witness = max_abs_entry(gd.entries - gb.entries);
    c.pass = c.witness <= tol;
    c.context["alpha"] = {{"re", in.alpha.real()}, {"im", in.alpha.imag()}};
    c.context["lambda"] = {{"re", in.lambda.value().real()}, {"im", in.lambda.value().imag()}};
    c.context["n"] = n;
    c.context["A"] = out.A;
    c.context["B"] = {{"re", out.B.real()}, {"im", out.B.imag()}};
    return c;
}

struct CorollaryParams {
    double weight = 0.0;
    Complex lambda{};
};

/**
 * @brief For b = gamma z / (1 - beta z) with |beta| + |gamma| = 1, beta != 0:
 * the boundary measure weight * delta_lambda with weight = |gamma|^2 / |beta|
 * and lambda = conj(beta) / |beta|.
 */
inline CorollaryParams corollary_params(Complex beta, Complex gamma, double tol = 1e-10) {
    const double rb = std::abs(beta);
    if (rb == 0.0) throw std::invalid_argument("circle parametrisation requires beta != 0");
    const double gap = std::abs(rb + std::abs(gamma) - 1.0);
    if (gap > tol)
        throw std::invalid_argument("circle parametrisation requires |beta| + |gamma| = 1 (off by " + std::to_string(gap) + ")");
    return CorollaryParams{std::norm(gamma) / rb, std::conj(beta) / rb};
}

struct SymbolClass {
    bool completely_hyperexpansive = false;
    bool two_isometry = false;
};

/**
 * @brief Shift behaviour on H(b) for a valid nonextreme Moebius symbol.
 *
 * Every such symbol gives a completely hyperexpansive shift. It is a
 * 2-isometry exactly when s = 2|beta + conj(c) gamma|, i.e. rho = |sigma|.
 */
inline SymbolClass classify_symbol(const MoebiusSymbol& b, double tol = 1e-10) {
    const auto st = b.status();
    if (!st.nonextreme) throw std::invalid_argument("cannot classify symbol: " + st.reason);
    SymbolClass out;
    out.completely_hyperexpansive = true;
    out.two_isometry = std::abs(b.s() - 2.0 * std::abs(b.t())) <= tol;
    return out;
}

}  // namespace dbr
