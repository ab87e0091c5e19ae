#pragma once

// Test-only reference computations. None of these call the library routine
// they are used to check.

#include <complex>
#include <cstddef>
#include <random>
#include <vector>

#include "dbr/dirichlet.hpp"

namespace oracle {

using Complex = std::complex<double>;

/// (z^n - lambda^n) / (z - lambda) = sum_{j<n} lambda^(n-1-j) z^j
inline std::vector<Complex> geometric_quotient(std::size_t n, Complex lambda) {
    std::vector<Complex> q(n);
    Complex p = 1.0;
    for (std::size_t j = n; j-- > 0;) {
        q[j] = p;
        p *= lambda;
    }
    return q;
}

/// Multiply out (z - zeta) q(z) + r.
inline std::vector<Complex> reconstruct(const std::vector<Complex>& q, Complex zeta, Complex r) {
    std::vector<Complex> f(q.size() + 1, Complex{});
    f[0] = r;
    for (std::size_t j = 0; j < q.size(); ++j) {
        f[j + 1] += q[j];
        f[j] -= zeta * q[j];
    }
    return f;
}

/// <z^n, z^m>_{D(mu)} from the explicit quotient coefficients.
inline Complex dmu_monomial_inner(std::size_t n, std::size_t m, const dbr::PointMassMeasure& mu) {
    Complex s = n == m ? 1.0 : 0.0;
    for (const auto& a : mu.atoms()) {
        const auto qn = geometric_quotient(n, a.location.value());
        const auto qm = geometric_quotient(m, a.location.value());
        Complex t{};
        for (std::size_t j = 0; j < std::min(n, m); ++j) t += qn[j] * std::conj(qm[j]);
        s += a.weight * t;
    }
    return s;
}

/// Random polynomial with coefficients uniform in the unit square.
inline dbr::ComplexPoly random_poly(std::mt19937_64& rng, std::size_t degree) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<Complex> c(degree + 1);
    for (auto& x : c) x = {u(rng), u(rng)};
    return dbr::ComplexPoly(std::move(c));
}

inline Complex random_disk_point(std::mt19937_64& rng, double rmin = 0.0, double rmax = 1.0) {
    std::uniform_real_distribution<double> ur(rmin, rmax), ut(0.0, 2.0 * 3.14159265358979323846);
    return std::polar(ur(rng), ut(rng));
}

}  // namespace oracle
