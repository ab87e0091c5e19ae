#include <gtest/gtest.h>

#include <random>

#include "dbr/synthesis.hpp"
#include "oracles.hpp"

using dbr::Complex;
using dbr::ComplexPoly;
using dbr::DiskPoint;

namespace {

constexpr Complex I{0.0, 1.0};

dbr::SynthesisOutput synth(Complex alpha, Complex lambda) { return dbr::synthesize_symbol({alpha, DiskPoint(lambda)}); }

/// A^2 straight from the two-case closed form, minus branch, lambda != 0.
double a2_closed_form(double a2, double l2) {
    const double S = 1.0 + a2 + l2;
    return a2 / (2.0 * l2) * (S - std::sqrt(S * S - 4.0 * l2));
}

/// |B| for the rejected plus branch.
double plus_branch_beta(double a2, double l2) {
    const double S = 1.0 + a2 + l2;
    const double A2 = a2 / (2.0 * l2) * (S + std::sqrt(S * S - 4.0 * l2));
    return A2 * std::sqrt(l2) / a2;
}

}  // namespace

TEST(SynthesizeSymbol, WorkedExamples) {
    const auto e1 = synth(1.0, 0.0);
    EXPECT_NEAR(e1.A, 0.7071067811865476, 1e-12);
    EXPECT_EQ(e1.B, Complex(0.0));

    const double r65 = std::sqrt(65.0);
    const auto e2 = synth(1.0, 0.5);
    EXPECT_NEAR(e2.A * e2.A, (9.0 - r65) / 2.0, 1e-12);
    EXPECT_NEAR(e2.A, 0.684741, 1e-6);
    EXPECT_NEAR(std::abs(e2.B - (9.0 - r65) / 4.0), 0.0, 1e-12);
    EXPECT_NEAR(e2.B.real(), 0.2344355, 1e-7);

    const double r5 = std::sqrt(5.0);
    const auto e3 = synth(1.0, 1.0);
    EXPECT_NEAR(e3.A, (r5 - 1.0) / 2.0, 1e-12);
    EXPECT_NEAR(std::abs(e3.B - (3.0 - r5) / 2.0), 0.0, 1e-12);
    EXPECT_NEAR(e3.A + std::abs(e3.B), 1.0, 1e-12);
}

TEST(SynthesizeSymbol, ZeroAlphaAndErrors) {
    const auto z = synth(0.0, 0.3);
    EXPECT_EQ(z.A, 0.0);
    EXPECT_EQ(z.B, Complex(0.0));
    EXPECT_THROW(synth(1.0, 1.2), std::invalid_argument);
}

TEST(SynthesizeSymbol, AgreesWithClosedFormAndGaugeInvariants) {
    std::mt19937_64 rng(81);
    for (int trial = 0; trial < 200; ++trial) {
        const Complex alpha = oracle::random_disk_point(rng, 0.05, 3.0);
        const Complex lambda = oracle::random_disk_point(rng, 0.05, 1.0);
        const auto out = synth(alpha, lambda);
        EXPECT_GE(out.A, 0.0);
        EXPECT_LT(std::abs(out.B), 1.0);
        // the two-case form cancels as |lambda| -> 0, so its own error grows like eps S / |lambda|^2
        const double l2 = std::norm(lambda);
        EXPECT_NEAR(out.A * out.A, a2_closed_form(std::norm(alpha), l2), 1e-12 + 1e-14 * (1.0 + std::norm(alpha)) / l2);
        EXPECT_NEAR(std::abs(out.B - out.A * out.A * std::conj(lambda) / std::norm(alpha)), 0.0, 1e-12);
    }
}

TEST(SynthesizeSymbol, PlusBranchLeavesTheDisk) {
    for (double a = 0.1; a <= 3.0 + 1e-12; a += 0.1)
        for (double l = 0.05; l <= 1.0 + 1e-12; l += 0.05) {
            const auto out = synth(a, l);
            EXPECT_LT(std::abs(out.B), 1.0);
            EXPECT_GT(plus_branch_beta(a * a, l * l), 1.0);
        }
}

TEST(SynthesizeSymbol, ContinuousAtOrigin) {
    for (double a : {0.1, 0.5, 1.0, 2.0, 3.0}) {
        const double at_zero = synth(a, 0.0).A;
        EXPECT_NEAR(at_zero * at_zero, a * a / (1.0 + a * a), 1e-15);
        for (Complex lam : {Complex(1e-4), 1e-4 * I, std::polar(1e-4, 2.5)}) {
            const double near = synth(a, lam).A;
            EXPECT_NEAR(near * near, at_zero * at_zero, 1e-8);
        }
    }
}

TEST(SynthesizeSymbol, MateRatioEqualsAtomModulus) {
    // The mate satisfies sigma/rho = conj(lambda): r = 1 - |lambda|^2, and
    // phi = b/a = |alpha| z / (1 - conj(lambda) z).
    std::mt19937_64 rng(83);
    for (int trial = 0; trial < 50; ++trial) {
        const double alpha = std::uniform_real_distribution<double>(0.1, 3.0)(rng);
        const Complex lambda = oracle::random_disk_point(rng);
        const auto pair = dbr::pythagorean_mate(synth(alpha, lambda).symbol());
        EXPECT_NEAR(std::abs(pair.sigma() / pair.rho() - std::conj(lambda)), 0.0, 1e-12);
        EXPECT_NEAR(pair.ratio_factor(), 1.0 - std::norm(lambda), 1e-12);
        const Complex w = 0.3 - 0.2 * I;
        const Complex phi = pair.b()(w) / pair.a(w);
        EXPECT_NEAR(std::abs(phi - alpha * w / (1.0 - std::conj(lambda) * w)), 0.0, 1e-12);
    }
}

TEST(SynthesizeSymbol, FplusIsScaledDifferenceQuotient) {
    for (Complex lambda : {Complex(0.5), 0.3 + 0.4 * I, std::polar(1.0, 1.0), Complex(-0.7)}) {
        const double alpha = 0.8;
        const auto pair = dbr::pythagorean_mate(synth(alpha, lambda).symbol());
        for (std::size_t n = 1; n <= 10; ++n) {
            const auto fp = dbr::fplus(ComplexPoly::monomial(n), pair);
            const auto q = oracle::geometric_quotient(n, lambda);
            for (std::size_t j = 0; j < n; ++j) EXPECT_NEAR(std::abs(fp[j] - alpha * q[j]), 0.0, 1e-12);
        }
    }
}

TEST(VerifyNormEquality, Examples) {
    const auto c1 = dbr::verify_norm_equality({1.0, DiskPoint(0.0)}, 16);
    EXPECT_TRUE(c1.pass);
    EXPECT_EQ(c1.kind, "norm_equality");
    const auto c2 = dbr::verify_norm_equality({1.0, DiskPoint(0.5)}, 24);
    EXPECT_TRUE(c2.pass) << c2.witness;
    const auto c3 = dbr::verify_norm_equality({0.0, DiskPoint(0.3)}, 8);
    EXPECT_TRUE(c3.pass);
    EXPECT_EQ(c3.witness, 0.0);
    EXPECT_THROW(dbr::verify_norm_equality({1.0, DiskPoint(0.0)}, 1), std::invalid_argument);
}

TEST(VerifyNormEquality, RandomParameters) {
    std::mt19937_64 rng(87);
    for (int trial = 0; trial < 30; ++trial) {
        const Complex alpha = oracle::random_disk_point(rng, 0.0, 3.0);
        Complex lambda = oracle::random_disk_point(rng);
        if (trial % 5 == 0) lambda /= std::abs(lambda);
        const auto c = dbr::verify_norm_equality({alpha, DiskPoint(lambda)}, 20);
        EXPECT_TRUE(c.pass) << c.witness;
    }
}

TEST(VerifyNormEquality, OtherSymbolsFail) {
    // same |A| but the opposite phase of B: norms differ
    const auto out = synth(1.0, 0.5);
    const auto wrong = dbr::pythagorean_mate(dbr::MoebiusSymbol(0.0, out.A, -out.B));
    const auto gd = dbr::dmu_gram(dbr::PointMassMeasure::single(1.0, 0.5), 8);
    EXPECT_GT(dbr::max_abs_entry(gd.entries - dbr::hb_gram(wrong, 8).entries), 1e-3);
}

TEST(CorollaryParams, Examples) {
    const double r5 = std::sqrt(5.0);
    const auto p = dbr::corollary_params((3.0 - r5) / 2.0, (r5 - 1.0) / 2.0);
    EXPECT_NEAR(p.weight, 1.0, 1e-12);
    EXPECT_NEAR(std::abs(p.lambda - 1.0), 0.0, 1e-15);

    EXPECT_THROW(dbr::corollary_params(0.3, 0.3), std::invalid_argument);
    EXPECT_THROW(dbr::corollary_params(0.0, 1.0), std::invalid_argument);

    const auto q = dbr::corollary_params(0.25, 0.75);
    EXPECT_NEAR(q.weight, 2.25, 1e-15);
    EXPECT_NEAR(std::abs(q.lambda - 1.0), 0.0, 1e-15);
    const auto back = synth(std::sqrt(q.weight), q.lambda);
    EXPECT_NEAR(back.A, 0.75, 1e-10);
    EXPECT_NEAR(std::abs(back.B), 0.25, 1e-10);
}

TEST(CorollaryParams, CircleConsistency) {
    for (double a : {0.1, 0.5, 1.0, 2.0, 3.0})
        for (double theta : {0.0, 1.0, M_PI / 3, -2.5}) {
            const Complex lambda = std::polar(1.0, theta);
            const auto out = synth(a, lambda);
            EXPECT_NEAR(out.A + std::abs(out.B), 1.0, 1e-10);
            const auto p = dbr::corollary_params(out.B, out.A);
            EXPECT_NEAR(p.weight, a * a, 1e-10);
            EXPECT_NEAR(std::abs(p.lambda - lambda), 0.0, 1e-10);
        }
}

TEST(ClassifySymbol, Examples) {
    const auto boundary = dbr::classify_symbol(synth(1.0, 1.0).symbol());
    EXPECT_TRUE(boundary.two_isometry);
    EXPECT_TRUE(boundary.completely_hyperexpansive);
    const auto interior = dbr::classify_symbol(synth(1.0, 0.5).symbol());
    EXPECT_TRUE(interior.completely_hyperexpansive);
    EXPECT_FALSE(interior.two_isometry);
    EXPECT_FALSE(dbr::classify_symbol(dbr::MoebiusSymbol(0.0, 1.0 / std::sqrt(2.0), 0.0)).two_isometry);
    EXPECT_THROW(dbr::classify_symbol(dbr::MoebiusSymbol(0.0, 1.0, 0.0)), std::invalid_argument);
}

TEST(ClassifySymbol, AgreesWithSecondOrderForm) {
    std::mt19937_64 rng(89);
    for (int trial = 0; trial < 40; ++trial) {
        const double alpha = std::uniform_real_distribution<double>(0.2, 3.0)(rng);
        Complex lambda = oracle::random_disk_point(rng, 0.0, 0.95);
        const bool on_circle = trial % 2 == 0;
        if (on_circle) lambda /= std::abs(lambda);
        const auto out = synth(alpha, lambda);
        const auto cls = dbr::classify_symbol(out.symbol());
        EXPECT_EQ(cls.two_isometry, on_circle);
        const auto pair = dbr::pythagorean_mate(out.symbol());
        const auto b2 = dbr::hyperexpansive_form(dbr::hb_gram(pair, 18), 2);
        const bool vanishes = dbr::max_abs_entry(b2.entries) <= 1e-10;
        EXPECT_EQ(vanishes, cls.two_isometry);
        EXPECT_TRUE(dbr::certify_nsd(b2, 1e-10).pass);
    }
}
