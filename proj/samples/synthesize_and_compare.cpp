// Builds b = A z / (1 - B z) for mu = |alpha|^2 delta_lambda and prints how
// far the two monomial Gram matrices are apart.
//
//   synthesize_and_compare [alpha] [lambda] [N]
//   synthesize_and_compare 0.8 0.3+0.4i 24

#include <cstdio>
#include <string>

#include "dbr/dbr.hpp"

int main(int argc, char** argv) {
    const dbr::Complex alpha = argc > 1 ? dbr::io::parse_complex(argv[1]) : dbr::Complex(1.0);
    const dbr::Complex lambda = argc > 2 ? dbr::io::parse_complex(argv[2]) : dbr::Complex(0.5);
    const std::size_t n = argc > 3 ? std::stoul(argv[3]) : 24;

    const dbr::SynthesisInput in{alpha, dbr::DiskPoint(lambda)};
    const auto out = dbr::synthesize_symbol(in);
    std::printf("A = %.17g\nB = %.17g %+.17gi\n", out.A, out.B.real(), out.B.imag());

    const auto pair = dbr::pythagorean_mate(out.symbol());
    std::printf("mate: rho = %.17g, sigma = %.17g %+.17gi\n", pair.rho(), pair.sigma().real(), pair.sigma().imag());

    const auto mu = dbr::PointMassMeasure::single(alpha, lambda);
    const auto gd = dbr::dmu_gram(mu, n);
    const auto gb = dbr::hb_gram(pair, n);
    std::printf("max |G_D(mu) - G_H(b)| over %zu x %zu = %.3e\n", n, n, dbr::max_abs_entry(gd.entries - gb.entries));

    const auto cls = dbr::classify_symbol(out.symbol());
    std::printf("2-isometry: %s\n", cls.two_isometry ? "yes" : "no");
    return 0;
}
