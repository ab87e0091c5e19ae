#pragma once

/**
 * @file debranges.hpp
 * @brief de Branges-Rovnyak spaces H(b) for Moebius symbols
 * b(z) = (c + gamma z) / (1 - beta z).
 *
 * For nonextreme b with Pythagorean mate a, the norm splits as
 * ||f||_b^2 = ||f||_{H^2}^2 + ||f^+||_{H^2}^2 where f^+ solves
 * T_{conj a} f^+ = T_{conj b} f. Everything here works on polynomials, for
 * which f^+ is again a polynomial of no larger degree.
 */

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "dbr/hardy.hpp"
#include "dbr/matrix.hpp"

namespace dbr {

/// Absolute slack for the exact coefficient criteria of validate_symbol.
inline constexpr double kSymbolTol = 1e-12;

/// Relative size below which s^2 - 4|t|^2 is treated as an exact double root.
inline constexpr double kDoubleRootSlack = 64.0 * std::numeric_limits<double>::epsilon();

struct SymbolStatus {
    bool valid = false;
    bool nonextreme = false;
    bool inner = false;
    std::string reason;  ///< empty when nonextreme
};

namespace detail {

/// s = 1 + |beta|^2 - |c|^2 - |gamma|^2
inline double symbol_s(Complex c, Complex gamma, Complex beta) {
    return 1.0 + std::norm(beta) - std::norm(c) - std::norm(gamma);
}

/// beta + conj(c) gamma; |1 - beta z|^2 - |c + gamma z|^2 = s - 2 Re(t z) on the circle.
inline Complex symbol_t(Complex c, Complex gamma, Complex beta) { return beta + std::conj(c) * gamma; }

}  // namespace detail

/**
 * @brief Classify (c, gamma, beta) without sampling the boundary.
 *
 * On the circle |1 - beta z|^2 - |c + gamma z|^2 = s - 2 Re(t z), whose
 * minimum is s - 2|t|. So ||b||_inf <= 1 iff s >= 2|t|, and |b| = 1
 * identically on the circle iff s = 0 and t = 0.
 */
inline SymbolStatus validate_symbol(Complex c, Complex gamma, Complex beta) {
    SymbolStatus st;
    const bool finite = std::isfinite(std::abs(c)) && std::isfinite(std::abs(gamma)) && std::isfinite(std::abs(beta));
    if (!finite) {
        st.reason = "non-finite coefficient";
        return st;
    }
    if (!(std::abs(beta) < 1.0)) {
        st.reason = "|beta| >= 1 (pole in the closed disk)";
        return st;
    }
    const double s = detail::symbol_s(c, gamma, beta);
    const double t = std::abs(detail::symbol_t(c, gamma, beta));
    if (s < 2.0 * t - kSymbolTol) {
        st.reason = "sup norm exceeds 1 (s < 2|beta + conj(c) gamma|)";
        return st;
    }
    st.valid = true;
    st.inner = std::abs(s) <= kSymbolTol && t <= kSymbolTol;
    st.nonextreme = !st.inner;
    if (st.inner) st.reason = "inner symbol (extreme)";
    return st;
}

/// b(z) = (c + gamma z) / (1 - beta z) in the closed unit ball of H^infinity.
class MoebiusSymbol {
public:
    MoebiusSymbol() = default;

    MoebiusSymbol(Complex c, Complex gamma, Complex beta) : c_(c), gamma_(gamma), beta_(beta) {
        const auto st = validate_symbol(c, gamma, beta);
        if (!st.valid) throw std::invalid_argument("invalid symbol: " + st.reason);
    }

    Complex c() const noexcept { return c_; }
    Complex gamma() const noexcept { return gamma_; }
    Complex beta() const noexcept { return beta_; }

    double s() const noexcept { return detail::symbol_s(c_, gamma_, beta_); }
    Complex t() const noexcept { return detail::symbol_t(c_, gamma_, beta_); }
    SymbolStatus status() const { return validate_symbol(c_, gamma_, beta_); }

    Complex operator()(Complex z) const { return (c_ + gamma_ * z) / (1.0 - beta_ * z); }

    std::vector<Complex> taylor(std::size_t n) const { return moebius_taylor(c_, gamma_, beta_, n); }

    /// Number of Taylor coefficients kept for S*b so that |beta|^M <= 1e-16.
    std::size_t tail_length() const {
        const double r = std::abs(beta_);
        if (r == 0.0) return 1;
        const double m = std::ceil(-16.0 * std::log(10.0) / std::log(r));
        return static_cast<std::size_t>(std::clamp(m, 1.0, 2000.0));
    }

    /// Backward shift S*b = (b - b(0)) / z, truncated after tail_length() terms.
    ComplexPoly backward_shift() const {
        const auto k = taylor(tail_length() + 1);
        return ComplexPoly(std::vector<Complex>(k.begin() + 1, k.end()));
    }

private:
    Complex c_{};
    Complex gamma_{};
    Complex beta_{};
};

/**
 * @brief A nonextreme symbol together with its outer mate
 * a(z) = (rho - sigma z) / (1 - beta z), rho > 0, |a|^2 + |b|^2 = 1 on T.
 */
class PythagoreanPair {
public:
    PythagoreanPair(MoebiusSymbol b, double rho, Complex sigma) : b_(b), rho_(rho), sigma_(sigma) {
        if (!(rho > 0.0)) throw std::invalid_argument("mate requires rho > 0");
    }

    const MoebiusSymbol& b() const noexcept { return b_; }
    double rho() const noexcept { return rho_; }
    Complex sigma() const noexcept { return sigma_; }

    Complex a(Complex z) const { return (rho_ - sigma_ * z) / (1.0 - b_.beta() * z); }
    std::vector<Complex> a_taylor(std::size_t n) const { return moebius_taylor(rho_, -sigma_, b_.beta(), n); }

    /// a'(0) / a(0) = beta - sigma / rho
    Complex log_derivative_at_zero() const { return b_.beta() - sigma_ / rho_; }

    /// 1 - |beta - a'(0)/a(0)|^2 = 1 - |sigma/rho|^2
    double ratio_factor() const { return 1.0 - std::norm(sigma_ / rho_); }

    /// max |a|^2 + |b|^2 - 1 over the n-th roots of unity.
    double unit_circle_deviation(std::size_t n = 64) const {
        double worst = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            const Complex z = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n));
            worst = std::max(worst, std::abs(std::norm(a(z)) + std::norm(b_(z)) - 1.0));
        }
        return worst;
    }

private:
    MoebiusSymbol b_;
    double rho_;
    Complex sigma_;
};

/**
 * @brief Outer mate of a nonextreme Moebius symbol.
 *
 * Matching |rho - sigma z|^2 = s - 2 Re(t z) on the circle gives
 * rho^2 + |sigma|^2 = s and rho sigma = t. rho^2 is the larger root of
 * x^2 - s x + |t|^2 = 0, which is what makes rho >= |sigma| (a outer).
 */
inline PythagoreanPair pythagorean_mate(const MoebiusSymbol& b) {
    const auto st = b.status();
    if (!st.nonextreme) throw std::invalid_argument("no Pythagorean mate: " + st.reason);
    const double s = b.s();
    const Complex t = b.t();
    // At a double root (rho = |sigma|, the 2-isometric case) the computed
    // discriminant is pure rounding noise, and its square root would turn
    // O(eps) noise into O(sqrt(eps)) error in rho.
    double disc = s * s - 4.0 * std::norm(t);
    if (disc <= kDoubleRootSlack * s * s) disc = 0.0;
    const double rho = std::sqrt(0.5 * (s + std::sqrt(disc)));
    return PythagoreanPair(b, rho, t / rho);
}

namespace detail {

/// Conjugated Taylor coefficients of a and b, long enough for degree d inputs.
struct ToeplitzSymbols {
    std::vector<Complex> abar;
    std::vector<Complex> bbar;

    ToeplitzSymbols(const PythagoreanPair& pair, std::size_t n) : abar(pair.a_taylor(n)), bbar(pair.b().taylor(n)) {
        for (auto& x : abar) x = std::conj(x);
        for (auto& x : bbar) x = std::conj(x);
    }
};

/// Solves T_{conj a} x = T_{conj b} f for coefficient vector f (length n).
inline std::vector<Complex> fplus_coeffs(const std::vector<Complex>& f, const ToeplitzSymbols& sym, double rho) {
    const std::size_t n = f.size();
    std::vector<Complex> x(n);
    for (std::size_t i = n; i-- > 0;) {
        Complex g{};
        for (std::size_t j = i; j < n; ++j) g += sym.bbar[j - i] * f[j];
        for (std::size_t j = i + 1; j < n; ++j) g -= sym.abar[j - i] * x[j];
        x[i] = g / rho;
    }
    return x;
}

}  // namespace detail

/**
 * @brief f^+ with T_{conj a} f^+ = T_{conj b} f.
 *
 * The right-hand side g_i = sum_{j>=i} conj(b_{j-i}) f_j is back-substituted
 * through the upper triangular Toeplitz matrix of conj(a), whose diagonal is
 * rho > 0.
 */
inline ComplexPoly fplus(const ComplexPoly& f, const PythagoreanPair& pair) {
    if (f.is_zero()) return {};
    const detail::ToeplitzSymbols sym(pair, f.size());
    return ComplexPoly(detail::fplus_coeffs(f.coeffs(), sym, pair.rho()));
}

/// Apply the upper triangular Toeplitz matrix T_{conj h} to f, where h has
/// Taylor coefficients `h`.
inline ComplexPoly toeplitz_conj_apply(const std::vector<Complex>& h, const ComplexPoly& f) {
    std::vector<Complex> out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = i; j < f.size(); ++j)
            if (j - i < h.size()) out[i] += std::conj(h[j - i]) * f.coeffs()[j];
    return ComplexPoly(std::move(out));
}

inline Complex hb_inner(const ComplexPoly& f, const ComplexPoly& g, const PythagoreanPair& pair) {
    return h2_inner(f, g) + h2_inner(fplus(f, pair), fplus(g, pair));
}

inline double hb_norm_sq(const ComplexPoly& f, const PythagoreanPair& pair) {
    return h2_norm_sq(f) + h2_norm_sq(fplus(f, pair));
}

/// Monomial Gram matrix of H(b), size n x n. Each (z^k)^+ is solved once.
inline GramMatrix hb_gram(const PythagoreanPair& pair, std::size_t n) {
    if (n == 0) throw std::invalid_argument("hb_gram requires n >= 1");
    const auto N = static_cast<Eigen::Index>(n);
    const detail::ToeplitzSymbols sym(pair, n);
    CMatrix plus = CMatrix::Zero(N, N);  // row k = coefficients of (z^k)^+
    std::vector<Complex> mono(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::fill(mono.begin(), mono.end(), Complex{});
        mono[k] = 1.0;
        const auto x = detail::fplus_coeffs(mono, sym, pair.rho());
        for (std::size_t j = 0; j < n; ++j) plus(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j)) = x[j];
    }
    CMatrix g = CMatrix::Identity(N, N) + plus * plus.adjoint();
    return GramMatrix{"H(b)", std::move(g)};
}

/// ||k_w||_b^2 = (1 + |b(w)/a(w)|^2) / (1 - |w|^2)
inline double hb_cauchy_norm(const PythagoreanPair& pair, Complex w) {
    const double w2 = std::norm(w);
    if (!(w2 < 1.0)) throw std::invalid_argument("hb_cauchy_norm requires |w| < 1");
    return (1.0 + std::norm(pair.b()(w) / pair.a(w))) / (1.0 - w2);
}

}  // namespace dbr
