#pragma once

/**
 * @file hardy.hpp
 * @brief Polynomials as elements of the Hardy space H^2.
 *
 * Everything in this library is computed on analytic polynomials (and
 * truncated Cauchy kernels), stored as dense Taylor coefficient vectors.
 */

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dbr {

using Complex = std::complex<double>;

/// Coefficients with modulus at or below this are treated as exact zeros
/// when normalizing.
inline constexpr double kZeroThreshold = 1e-300;

/// Slack allowed on |z| <= 1 so that computed unimodular points such as
/// exp(i pi/3) are accepted as boundary points.
inline constexpr double kDiskSlack = 1e-12;

/**
 * @brief Analytic polynomial f(z) = sum_k coeffs[k] z^k.
 *
 * The coefficient vector is kept normalized: no trailing exact zeros, and the
 * zero polynomial is the empty vector.
 */
class ComplexPoly {
public:
    ComplexPoly() = default;

    explicit ComplexPoly(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    ComplexPoly(std::initializer_list<Complex> coeffs) : coeffs_(coeffs) { normalize(); }

    /// z^n
    static ComplexPoly monomial(std::size_t n, Complex scale = 1.0) {
        std::vector<Complex> c(n + 1, Complex{});
        c[n] = scale;
        return ComplexPoly(std::move(c));
    }

    /// Cauchy kernel k_w(z) = 1/(1 - conj(w) z) truncated after z^degree.
    static ComplexPoly cauchy_kernel(Complex w, std::size_t degree) {
        std::vector<Complex> c(degree + 1);
        const Complex wbar = std::conj(w);
        Complex p = 1.0;
        for (std::size_t k = 0; k <= degree; ++k) {
            c[k] = p;
            p *= wbar;
        }
        return ComplexPoly(std::move(c));
    }

    const std::vector<Complex>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::size_t size() const noexcept { return coeffs_.size(); }

    /// Degree; -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }

    /// Coefficient of z^k (zero past the end).
    Complex operator[](std::size_t k) const noexcept { return k < coeffs_.size() ? coeffs_[k] : Complex{}; }

    friend ComplexPoly operator+(const ComplexPoly& f, const ComplexPoly& g) {
        std::vector<Complex> c(std::max(f.size(), g.size()));
        for (std::size_t k = 0; k < c.size(); ++k) c[k] = f[k] + g[k];
        return ComplexPoly(std::move(c));
    }

    friend ComplexPoly operator-(const ComplexPoly& f, const ComplexPoly& g) {
        std::vector<Complex> c(std::max(f.size(), g.size()));
        for (std::size_t k = 0; k < c.size(); ++k) c[k] = f[k] - g[k];
        return ComplexPoly(std::move(c));
    }

    friend ComplexPoly operator*(Complex s, const ComplexPoly& f) {
        std::vector<Complex> c(f.coeffs_);
        for (auto& x : c) x *= s;
        return ComplexPoly(std::move(c));
    }

    /// Schoolbook product.
    friend ComplexPoly operator*(const ComplexPoly& f, const ComplexPoly& g) {
        if (f.is_zero() || g.is_zero()) return {};
        std::vector<Complex> c(f.size() + g.size() - 1, Complex{});
        for (std::size_t i = 0; i < f.size(); ++i)
            for (std::size_t j = 0; j < g.size(); ++j) c[i + j] += f.coeffs_[i] * g.coeffs_[j];
        return ComplexPoly(std::move(c));
    }

    /// Multiplication by z (the unilateral shift S).
    ComplexPoly shifted() const {
        if (is_zero()) return {};
        std::vector<Complex> c(coeffs_.size() + 1, Complex{});
        std::copy(coeffs_.begin(), coeffs_.end(), c.begin() + 1);
        return ComplexPoly(std::move(c));
    }

    /// Largest coefficient modulus.
    double max_abs() const noexcept {
        double m = 0.0;
        for (const auto& x : coeffs_) m = std::max(m, std::abs(x));
        return m;
    }

private:
    void normalize() {
        while (!coeffs_.empty() && std::abs(coeffs_.back()) <= kZeroThreshold) coeffs_.pop_back();
    }

    std::vector<Complex> coeffs_;
};

/// A point of the closed unit disk.
class DiskPoint {
public:
    explicit DiskPoint(Complex value) : value_(value) {
        if (!std::isfinite(value.real()) || !std::isfinite(value.imag()))
            throw std::invalid_argument("disk point must be finite");
        if (std::abs(value) > 1.0 + kDiskSlack)
            throw std::invalid_argument("point " + std::to_string(std::abs(value)) +
                                        " lies outside the closed unit disk");
    }

    Complex value() const noexcept { return value_; }
    operator Complex() const noexcept { return value_; }
    bool on_circle(double tol = kDiskSlack) const noexcept { return std::abs(std::abs(value_) - 1.0) <= tol; }

private:
    Complex value_;
};

/// <f, g>_{H^2} = sum_k f_k conj(g_k)
inline Complex h2_inner(const ComplexPoly& f, const ComplexPoly& g) {
    const std::size_t n = std::min(f.size(), g.size());
    Complex s{};
    for (std::size_t k = 0; k < n; ++k) s += f.coeffs()[k] * std::conj(g.coeffs()[k]);
    return s;
}

inline double h2_norm_sq(const ComplexPoly& f) {
    double s = 0.0;
    for (const auto& x : f.coeffs()) s += std::norm(x);
    return s;
}

/// Horner evaluation.
inline Complex poly_eval(const ComplexPoly& f, Complex z) {
    Complex acc{};
    const auto& c = f.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
}

/**
 * @brief (f - f(zeta)) / (z - zeta) by synthetic division.
 *
 * The quotient q satisfies f(z) = f(zeta) + (z - zeta) q(z) coefficientwise
 * and deg q = deg f - 1. Boundary points are fine: polynomials have values
 * everywhere.
 */
inline ComplexPoly difference_quotient(const ComplexPoly& f, const DiskPoint& zeta) {
    const auto& c = f.coeffs();
    if (c.size() <= 1) return {};
    const Complex z0 = zeta.value();
    std::vector<Complex> q(c.size() - 1);
    Complex acc = c.back();
    q.back() = acc;
    for (std::size_t k = c.size() - 2; k >= 1; --k) {
        acc = c[k] + z0 * acc;
        q[k - 1] = acc;
    }
    return ComplexPoly(std::move(q));
}

/**
 * @brief First n Taylor coefficients of (c + gamma z) / (1 - beta z).
 *
 * coeff_0 = c and coeff_k = beta^(k-1) (c beta + gamma) for k >= 1. The
 * result has exactly n entries (not normalized).
 */
inline std::vector<Complex> moebius_taylor(Complex c, Complex gamma, Complex beta, std::size_t n) {
    if (!(std::abs(beta) < 1.0)) throw std::invalid_argument("moebius_taylor requires |beta| < 1");
    if (n == 0) throw std::invalid_argument("moebius_taylor requires at least one coefficient");
    std::vector<Complex> out(n);
    out[0] = c;
    Complex t = c * beta + gamma;
    for (std::size_t k = 1; k < n; ++k) {
        out[k] = t;
        t *= beta;
    }
    return out;
}

}  // namespace dbr
