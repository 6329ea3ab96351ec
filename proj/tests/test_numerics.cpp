#include "oracles.hpp"

#include "zerr/recurrence.hpp"
#include "zerr/roots.hpp"
#include "zerr/spectral.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace zerr;

TEST(UniquePositiveRoot, QuadraticClosedForms) {
    EXPECT_NEAR(unique_positive_root(IntPolynomial{-5, -1, 1}), (1 + std::sqrt(21.0)) / 2, 1e-12);
    EXPECT_NEAR(unique_positive_root(IntPolynomial{-6, -1, 1}), 3.0, 1e-12);
    EXPECT_NEAR(unique_positive_root(IntPolynomial{-5, 0, 1}), std::sqrt(5.0), 1e-12);
}

TEST(UniquePositiveRoot, CubicFromMixedLengths) {
    // X^3 - 5X - 2 = (X + 2)(X^2 - 2X - 1)
    EXPECT_NEAR(unique_positive_root(IntPolynomial{-2, -5, 0, 1}), 1 + std::sqrt(2.0), 1e-12);
}

TEST(UniquePositiveRoot, RejectsWrongShape) {
    EXPECT_THROW(unique_positive_root(IntPolynomial{-1, 2}), invalid_input);   // not monic
    EXPECT_THROW(unique_positive_root(IntPolynomial{1, 0, 1}), invalid_input);  // positive lower coefficient
    EXPECT_THROW(unique_positive_root(IntPolynomial{0, 0, 1}), invalid_input);  // all zero
}

TEST(PolynomialRoots, MatchKnownRoots) {
    auto roots = polynomial_roots(IntPolynomial{-2, -5, 0, 1});
    ASSERT_EQ(roots.size(), 3u);
    EXPECT_NEAR(roots[0].real(), 1 + std::sqrt(2.0), 1e-10);
    EXPECT_NEAR(roots[1].real(), -2.0, 1e-10);
    EXPECT_NEAR(roots[2].real(), 1 - std::sqrt(2.0), 1e-10);
    for (auto r : roots) EXPECT_EQ(r.imag(), 0.0);
}

TEST(PolynomialRoots, ComplexPairsAndZeroRoots) {
    auto roots = polynomial_roots(IntPolynomial{0, 1, 0, 1});  // z (z^2 + 1)
    ASSERT_EQ(roots.size(), 3u);
    int zeros = 0, units = 0;
    for (auto r : roots) {
        if (std::abs(r) < 1e-12) ++zeros;
        if (std::abs(std::abs(r) - 1) < 1e-10 && std::abs(r.real()) < 1e-10) ++units;
    }
    EXPECT_EQ(zeros, 1);
    EXPECT_EQ(units, 2);
}

TEST(PolynomialRoots, ResidualsAreSmall) {
    IntPolynomial p{7, -3, 0, 2, -1, 1};
    for (auto r : polynomial_roots(p)) EXPECT_LT(std::abs(p.evaluate(r)), 1e-8);
}

TEST(SmallestModulusRoot, SeriesDenominator) {
    auto r = smallest_modulus_root(IntPolynomial{-1, 2, 4});
    EXPECT_NEAR(r.real(), (std::sqrt(5.0) - 1) / 4, 1e-12);
    EXPECT_EQ(r.imag(), 0.0);
}

TEST(SmallestModulusRoot, TieBreaksTowardsPositiveReal) {
    // 1 - z^2: roots +1 and -1
    auto r = smallest_modulus_root(IntPolynomial{1, 0, -1});
    EXPECT_NEAR(r.real(), 1.0, 1e-12);
    // 1 + z^2: roots +-i, tie broken by imaginary part
    auto q = smallest_modulus_root(IntPolynomial{1, 0, 1});
    EXPECT_NEAR(q.imag(), 1.0, 1e-12);
}

TEST(SpectralRadius, SmallMatrices) {
    EXPECT_NEAR(spectral_radius(SquareMatrix{{1, 1}, {1, 0}}), (1 + std::sqrt(5.0)) / 2, 1e-12);
    EXPECT_NEAR(spectral_radius(SquareMatrix{{0, 1}, {1, 0}}), 1.0, 1e-12);  // periodic
    EXPECT_NEAR(spectral_radius(SquareMatrix{{0, 1}, {0, 0}}), 0.0, 1e-12);  // nilpotent
    EXPECT_NEAR(spectral_radius(SquareMatrix{{2, 1}, {0, 3}}), 3.0, 1e-12);  // reducible
    EXPECT_NEAR(spectral_radius(SquareMatrix::identity(4)), 1.0, 1e-12);
    EXPECT_THROW((SquareMatrix{{1, -1}, {0, 1}}), invalid_input);
}

TEST(SpectralRadius, IntermingledHubMatrix) {
    // hub with a self-loop and five two-cycles through it
    SquareMatrix m(6);
    m(0, 0) = 1;
    for (std::size_t i = 1; i <= 5; ++i) m(0, i) = m(i, 0) = m(i, i) = 1;
    // characteristic polynomial (X - 1 - sqrt5)(X - 1 + sqrt5)(X - 1)^4
    EXPECT_NEAR(spectral_radius(m), 1 + std::sqrt(5.0), 1e-9);
}

TEST(CompanionMatrix, SpectralRadiusEqualsPositiveRoot) {
    std::vector<BigInt> per_length{1, 5};
    auto cm = CompanionMatrix::from_length_counts(per_length);
    EXPECT_NEAR(spectral_radius(cm.to_matrix()), unique_positive_root(characteristic_polynomial(per_length)), 1e-10);
    auto cm2 = CompanionMatrix::from_polynomial(IntPolynomial{-2, -5, 0, 1});
    EXPECT_EQ(cm2.last_row, (std::vector<BigInt>{2, 5, 0}));
    EXPECT_NEAR(spectral_radius(cm2.to_matrix()), 1 + std::sqrt(2.0), 1e-10);
}

TEST(LinearRecurrence, ExtendsFibonacci) {
    auto t = linear_recurrence_extend({1, 1}, CountSequence{1, 1}, 10);
    EXPECT_EQ(t[10], 89);
    EXPECT_THROW(linear_recurrence_extend({1, 1}, CountSequence{1}, 5), invalid_input);
}

TEST(LinearRecurrence, MatchesCompanionMatrixPowers) {
    std::vector<BigInt> per_length{0, 5, 2};
    auto t = linear_recurrence_extend(per_length, CountSequence{1, 0, 5}, 25);
    auto cm = CompanionMatrix::from_length_counts(per_length).to_matrix();
    std::vector<std::vector<BigInt>> m(3, std::vector<BigInt>(3));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) m[i][j] = cm(i, j);
    // window (t_L, t_{L+1}, t_{L+2}) = M^L (t_0, t_1, t_2)
    for (std::size_t l = 0; l <= 20; ++l) {
        BigInt top = oracle::matrix_power_entry(m, l, 0, 0) * 1 + oracle::matrix_power_entry(m, l, 0, 1) * 0 +
                     oracle::matrix_power_entry(m, l, 0, 2) * 5;
        EXPECT_EQ(top, t[l]) << l;
    }
}

TEST(CharacteristicPolynomial, FromLengthHistogram) {
    EXPECT_EQ(characteristic_polynomial({1, 5}), (IntPolynomial{-5, -1, 1}));
    EXPECT_EQ(characteristic_polynomial({0, 5, 2}), (IntPolynomial{-2, -5, 0, 1}));
    EXPECT_EQ(concatenation_series({1, 5}), RationalFraction(IntPolynomial{1}, IntPolynomial{1, -1, -5}));
}

TEST(ClosedForm, MixedLengthCodeCoefficients) {
    auto terms = closed_form_counts(IntPolynomial{-2, -5, 0, 1}, {0, 5, 2}, 1);
    ASSERT_EQ(terms.size(), 3u);
    const double s2 = std::sqrt(2.0);
    EXPECT_NEAR(terms[0].root.real(), 1 + s2, 1e-12);
    EXPECT_NEAR(terms[0].coefficient.real(), (6 + 5 * s2) / 28, 1e-9);
    EXPECT_NEAR(terms[1].coefficient.real(), 4.0 / 7, 1e-9);
    EXPECT_NEAR(terms[2].coefficient.real(), (6 - 5 * s2) / 28, 1e-9);
    // seeding from L = 0 gives the same coefficients
    auto from_zero = closed_form_counts(IntPolynomial{-2, -5, 0, 1}, {1, 0, 5});
    for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(std::abs(from_zero[i].coefficient - terms[i].coefficient), 0, 1e-9);
}

TEST(ClosedForm, RejectsRepeatedRoots) {
    EXPECT_THROW(closed_form_counts(IntPolynomial{1, -2, 1}, {1, 2}), unsupported_multiplicity);
    EXPECT_THROW(closed_form_counts(IntPolynomial{-1, 1}, {}), invalid_input);
}

TEST(ClosedForm, EnvelopesBracketTheRoots) {
    auto terms = closed_form_counts(IntPolynomial{-2, -5, 0, 1}, {1, 0, 5});
    auto counts = linear_recurrence_extend({0, 5, 2}, CountSequence{1, 0, 5}, 50);
    for (std::size_t l = 4; l <= 50; ++l) {
        auto env = oscillation_envelopes(terms, static_cast<double>(l));
        double root = *counts.root(l);
        EXPECT_LE(root, env.upper + 1e-9) << l;
        EXPECT_GE(root, env.lower - 1e-9) << l;
        EXPECT_NEAR(env.dominant, std::pow(terms[0].coefficient.real(), 1.0 / l) * (1 + std::sqrt(2.0)), 1e-9);
    }
}
