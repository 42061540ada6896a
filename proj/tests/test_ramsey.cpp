#include "hwobs/ramsey.hpp"
#include "support/generators.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace hwobs;

TEST(Rotation, IsUnitary) {
    for (double phi : {0.0, std::numbers::pi / 4, 1.3, -2.0}) EXPECT_LT(unitarity_defect(rotation(phi)), 1e-15);
}

TEST(Rotation, ZeroPhaseEntries) {
    const double s = 1.0 / std::numbers::sqrt2;
    const ComplexMatrix expected{{s, s}, {-s, s}};
    EXPECT_LT(max_abs_diff(rotation(0.0), expected), 1e-15);
}

TEST(ConditionalDisplacement, ActsOnlyOnUpBranch) {
    const PhasePoint p{3, 1, 2};
    const ComplexMatrix u = conditional_displacement(p);
    EXPECT_LT(unitarity_defect(u), 1e-14);
    const ComplexMatrix disp = displacement(p);
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b) {
            EXPECT_EQ(u(a * 2 + kQubitUp, b * 2 + kQubitUp), disp(a, b));
            EXPECT_EQ(u(a * 2 + kQubitDown, b * 2 + kQubitDown), (a == b ? Complex{1.0, 0.0} : Complex{}));
            EXPECT_EQ(u(a * 2 + kQubitUp, b * 2 + kQubitDown), Complex{});
        }
}

TEST(Povm, QubitZElements) {
    const Povm e = povm_elements({2, 1, 0});
    const double s = 1.0 / (2.0 * std::numbers::sqrt2);
    const ComplexMatrix up{{0.5 + s, 0.0}, {0.0, 0.5 - s}};
    EXPECT_LT(max_abs_diff(e.up, up), 1e-14);
}

TEST(Povm, CompletenessAndEstimatorIdentity) {
    for (int d = 2; d <= 6; ++d)
        for (const auto& p : nonidentity_points(d)) {
            const Povm e = povm_elements(p);
            EXPECT_LT(max_abs_diff(e.up + e.down, ComplexMatrix::identity(static_cast<std::size_t>(d))), 1e-10);
            const ComplexMatrix q = Complex{1.0 / std::numbers::sqrt2, 0.0} * hw_observable(p).matrix;
            EXPECT_LT(max_abs_diff(e.up - e.down, q), 1e-10) << p.to_string();
        }
}

TEST(ExactProbabilities, MaximallyMixedIsFair) {
    for (const auto& p : nonidentity_points(4)) {
        const auto pr = exact_probabilities(max_mixed({4}), p);
        EXPECT_NEAR(pr.up, 0.5, 1e-12);
        EXPECT_NEAR(pr.down, 0.5, 1e-12);
    }
}

TEST(ExactProbabilities, DimensionMismatch) {
    EXPECT_THROW(exact_probabilities(max_mixed({3}), PhasePoint(4, 1, 0)), DimensionError);
}

TEST(Sampling, SameSeedSameCounts) {
    const PhasePoint p{3, 1, 1};
    EXPECT_EQ(sample_outcomes(0.3, p, 1000, 7), sample_outcomes(0.3, p, 1000, 7));
    EXPECT_NE(sample_outcomes(0.3, p, 1000, 7).count_up, sample_outcomes(0.3, p, 1000, 8).count_up);
}

TEST(Sampling, CertainOutcomeGivesRootTwo) {
    const MeasurementRecord r = sample_outcomes(1.0, {2, 1, 0}, 500, 1);
    EXPECT_EQ(r.count_up, 500);
    EXPECT_DOUBLE_EQ(estimate(r), std::numbers::sqrt2);
}

TEST(Sampling, RejectsZeroShots) { EXPECT_THROW(sample_outcomes(0.5, {2, 1, 0}, 0, 1), ValidationError); }

TEST(Record, Validation) {
    MeasurementRecord r{10, 4, 6, 0, {2, 1, 0}};
    EXPECT_NO_THROW(validate(r));
    r.count_down = 5;
    EXPECT_THROW(validate(r), ValidationError);
    r = {10, -1, 11, 0, {2, 1, 0}};
    EXPECT_THROW(validate(r), ValidationError);
    r = {0, 0, 0, 0, {2, 1, 0}};
    EXPECT_THROW(estimate(r), ValidationError);
}

TEST(EstimateBloch, ExactModeRecoversDecomposition) {
    proptest::Generator gen(61);
    for (int d = 2; d <= 5; ++d) {
        const DensityMatrix rho = DensityMatrix::create(gen.density(static_cast<std::size_t>(d), 2));
        const BlochVector exact = decompose(rho);
        const BlochVector est = estimate_bloch(rho, std::nullopt, 0);
        for (std::size_t k = 0; k < exact.components.size(); ++k) EXPECT_NEAR(est.components[k], exact.components[k], 1e-10);
    }
}

TEST(EstimateBloch, QutritShotNoise) {
    const DensityMatrix rho = random_density(3, 1, 5);
    const BlochVector exact = decompose(rho);
    const BlochVector est = estimate_bloch(rho, 100000, 11);
    for (std::size_t k = 0; k < exact.components.size(); ++k) EXPECT_LT(std::abs(est.components[k] - exact.components[k]), 0.02);
}

TEST(EstimateBloch, RejectsCompositeAndBadShots) {
    EXPECT_THROW(estimate_bloch(max_entangled(2), std::nullopt, 0), DimensionError);
    EXPECT_THROW(estimate_bloch(max_mixed({2}), 0, 0), ValidationError);
}

// --- properties -----------------------------------------------------------

TEST(RamseyProperty, EstimatorConcentrates) {
    const DensityMatrix rho = random_density(4, 2, 3);
    const PhasePoint p{4, 1, 2};
    const double truth = expectation(rho.matrix(), hw_observable(p).matrix);
    const std::int64_t shots = 1000000;
    int within = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const double e = estimate(sample(rho, p, shots, seed));
        within += std::abs(e - truth) <= 5.0 * std::sqrt(2.0 / static_cast<double>(shots)) ? 1 : 0;
    }
    EXPECT_GE(within, 99);
}

TEST(RamseyProperty, MaximallyMixedMeanIsZero) {
    double sum = 0.0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) sum += estimate(sample(max_mixed({3}), {3, 1, 0}, 1000, seed));
    EXPECT_LT(std::abs(sum / 200.0), 5.0 * std::sqrt(2.0 / 200000.0));
}

TEST(RamseyProperty, VarianceScalesInverselyWithShots) {
    const double p_up = 0.7;
    const PhasePoint p{3, 2, 1};
    auto scaled_variance = [&](std::int64_t shots) {
        constexpr int trials = 2000;
        double s = 0.0, s2 = 0.0;
        for (int t = 0; t < trials; ++t) {
            const double e = estimate(sample_outcomes(p_up, p, shots, static_cast<std::uint64_t>(t)));
            s += e;
            s2 += e * e;
        }
        const double mean = s / trials;
        return (s2 / trials - mean * mean) * static_cast<double>(shots);
    };
    const double expected = 8.0 * p_up * (1.0 - p_up);  // Var(sqrt2 (2B/n - 1)) n
    for (std::int64_t shots : {100, 1000, 10000}) EXPECT_NEAR(scaled_variance(shots) / expected, 1.0, 0.2) << shots;
}
