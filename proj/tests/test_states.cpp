#include "hwobs/acbound.hpp"
#include "hwobs/states.hpp"
#include "support/generators.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace hwobs;

namespace {

WitnessSpec ghz_cut_witness() {
    WitnessSpec s;
    s.parties = {4, 4, 4};
    s.terms = {{{{4, 1, 0}, {4, 0, 0}, {4, 1, 0}}}, {{{4, 1, 2}, {4, 0, 2}, {4, 1, 2}}}, {{{4, 0, 2}, {4, 0, 2}, {4, 0, 2}}}};
    s.bound = 1.0;
    return s;
}

}  // namespace

TEST(MaxEntangled, QubitIsBellState) {
    const ComplexMatrix expected{{0.5, 0.0, 0.0, 0.5}, {0.0, 0.0, 0.0, 0.0}, {0.0, 0.0, 0.0, 0.0}, {0.5, 0.0, 0.0, 0.5}};
    EXPECT_LT(max_abs_diff(max_entangled(2).matrix(), expected), 1e-15);
}

TEST(MaxEntangled, QuartPurities) {
    const DensityMatrix rho = max_entangled(4);
    EXPECT_NEAR(purity(rho), 1.0, 1e-12);
    EXPECT_NEAR(purity(partial_trace(rho, 0)), 0.25, 1e-12);
}

TEST(MaxEntangled, NineLevelWitnessValueIsThree) {
    WitnessSpec s;
    s.parties = {9, 9};
    s.terms = {{{{9, 0, 1}, {9, 0, 8}}}, {{{9, 4, 0}, {9, 4, 0}}}, {{{9, 4, 1}, {9, 4, 8}}}};
    s.bound = 2.5;
    const WitnessReport r = evaluate_witness(max_entangled(9), s);
    EXPECT_NEAR(r.value, 3.0, 1e-9);
    for (double v : r.term_values) EXPECT_NEAR(v, 1.0, 1e-9);
}

TEST(Ghz, TwoPartiesIsMaxEntangled) {
    for (int d = 2; d <= 5; ++d) EXPECT_EQ(ghz(2, d).matrix(), max_entangled(d).matrix());
}

TEST(Ghz, ThreeQuartsEntries) {
    const DensityMatrix rho = ghz(3, 4);
    const ComplexMatrix& m = rho.matrix();
    ASSERT_EQ(m.rows(), 64u);
    for (std::size_t i = 0; i < 64; ++i)
        for (std::size_t j = 0; j < 64; ++j) {
            const bool diag_i = i % 21 == 0;  // |iii> = 16 i + 4 i + i
            const bool diag_j = j % 21 == 0;
            EXPECT_NEAR(std::abs(m(i, j) - (diag_i && diag_j ? 0.25 : 0.0)), 0.0, 1e-15);
        }
}

TEST(Ghz, QubitGhz) {
    const DensityMatrix rho = ghz(3, 2);
    EXPECT_NEAR(rho.matrix()(0, 7).real(), 0.5, 1e-15);
    EXPECT_NEAR(rho.matrix()(7, 7).real(), 0.5, 1e-15);
    EXPECT_EQ(rho.parties(), (std::vector<int>{2, 2, 2}));
}

TEST(Ghz, RejectsSingleParty) { EXPECT_THROW(ghz(1, 3), ValidationError); }

TEST(IsotropicMix, Endpoints) {
    const DensityMatrix rho = ghz(3, 2);
    EXPECT_EQ(isotropic_mix(rho, 1.0).matrix(), rho.matrix());
    EXPECT_LT(max_abs_diff(isotropic_mix(rho, 0.0).matrix(), max_mixed({2, 2, 2}).matrix()), 1e-15);
    EXPECT_EQ(evaluate_witness(isotropic_mix(ghz(3, 4), 0.0), ghz_cut_witness()).value, 0.0);
}

TEST(IsotropicMix, RejectsOutOfRange) {
    EXPECT_THROW(isotropic_mix(max_entangled(2), -0.1), ValidationError);
    EXPECT_THROW(isotropic_mix(max_entangled(2), 1.5), ValidationError);
    EXPECT_THROW(isotropic_mix(max_entangled(2), std::nan("")), ValidationError);
}

TEST(IsotropicMix, GhzWitnessCrossesBoundAtOneThird) {
    const WitnessSpec w = ghz_cut_witness();
    const double eps = 1e-6;
    EXPECT_TRUE(evaluate_witness(isotropic_mix(ghz(3, 4), 1.0 / 3.0 + eps), w).violated);
    EXPECT_FALSE(evaluate_witness(isotropic_mix(ghz(3, 4), 1.0 / 3.0 - eps), w).violated);
}

TEST(IsotropicMix, WitnessValueIsLinearInP) {
    const WitnessSpec w = ghz_cut_witness();
    for (double p : {0.1, 0.25, 0.5, 0.9}) EXPECT_NEAR(evaluate_witness(isotropic_mix(ghz(3, 4), p), w).value, 3.0 * p, 1e-12);
}

TEST(RandomDensity, RankOneIsPure) {
    for (int d = 2; d <= 6; ++d) EXPECT_NEAR(purity(random_density(d, 1, 7)), 1.0, 1e-10);
}

TEST(RandomDensity, FullRankIsPositiveDefinite) {
    for (int d = 2; d <= 6; ++d) EXPECT_GT(random_density(d, d, 8).min_eigenvalue(), 0.0);
}

TEST(RandomDensity, SameSeedIsBitIdentical) {
    EXPECT_EQ(random_density(5, 3, 42).matrix(), random_density(5, 3, 42).matrix());
    EXPECT_NE(random_density(5, 3, 42).matrix(), random_density(5, 3, 43).matrix());
    EXPECT_EQ(random_product_state({2, 3}, 9).matrix(), random_product_state({2, 3}, 9).matrix());
}

TEST(RandomDensity, RankOutOfRange) {
    EXPECT_THROW(random_density(3, 0, 1), ValidationError);
    EXPECT_THROW(random_density(3, 4, 1), ValidationError);
}

TEST(RandomProductState, IsProductOfItsMarginals) {
    const DensityMatrix rho = random_product_state({2, 3, 2}, 5);
    std::vector<ComplexMatrix> marginals;
    for (std::size_t k = 0; k < 3; ++k) marginals.push_back(partial_trace(rho, k).matrix());
    EXPECT_LT(max_abs_diff(kron(marginals), rho.matrix()), 1e-14);
}

TEST(StateSpec, BuildsEveryKind) {
    EXPECT_EQ(make_state({StateKind::MaxEntangled, 3, 2}).matrix(), max_entangled(3).matrix());
    EXPECT_EQ(make_state({StateKind::GHZ, 2, 4}).matrix(), ghz(4, 2).matrix());
    EXPECT_EQ(make_state({StateKind::MaxMixed, 3, 1}).matrix(), max_mixed({3}).matrix());
    EXPECT_EQ(make_state({StateKind::IsotropicMix, 4, 3, 0.5}).matrix(), isotropic_mix(ghz(3, 4), 0.5).matrix());
    const DensityMatrix ket = make_state({StateKind::PureKet, 2, 1, 1.0, {Complex{1.0, 0.0}, Complex{0.0, 1.0}}});
    EXPECT_NEAR(ket.matrix()(0, 1).imag(), -0.5, 1e-15);
}

TEST(StateSpec, Validation) {
    EXPECT_THROW(validate(StateSpec{StateKind::GHZ, 1, 3}), DimensionError);
    EXPECT_THROW(validate(StateSpec{StateKind::GHZ, 3, 1}), ValidationError);
    EXPECT_THROW(validate(StateSpec{StateKind::MaxEntangled, 3, 3}), ValidationError);
    EXPECT_THROW(validate(StateSpec{StateKind::IsotropicMix, 3, 2, 1.5}), ValidationError);
    EXPECT_THROW(validate(StateSpec{StateKind::PureKet, 2, 2, 1.0, {Complex{1.0, 0.0}}}), DimensionError);
}

// --- properties -----------------------------------------------------------

TEST(StatesProperty, FactoryOutputsAreValid) {
    proptest::Generator gen(41);
    for (int trial = 0; trial < 50; ++trial) {
        const int d = gen.integer(2, 4);
        const int n = gen.integer(2, 3);
        for (const DensityMatrix& rho : {ghz(n, d), max_entangled(d), isotropic_mix(ghz(n, d), gen.uniform(0.0, 1.0)),
                                         random_density(d, gen.integer(1, d), static_cast<std::uint64_t>(trial))}) {
            EXPECT_NO_THROW(DensityMatrix::create(rho.matrix(), rho.parties()));
        }
    }
}

TEST(StatesProperty, GhzIsPermutationInvariant) {
    const std::vector<std::vector<int>> perms = {{0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (int d : {2, 3, 4}) {
        const DensityMatrix rho = ghz(3, d);
        for (const auto& p : perms) EXPECT_LT(max_abs_diff(permute_parties(rho, p).matrix(), rho.matrix()), 1e-12);
    }
}

TEST(StatesProperty, PermutationMovesParties) {
    const DensityMatrix a = random_density(2, 2, 1);
    const DensityMatrix b = random_density(3, 3, 2);
    const DensityMatrix ab = DensityMatrix::create(kron(a.matrix(), b.matrix()), {2, 3});
    const std::vector<int> swap{1, 0};
    const DensityMatrix ba = permute_parties(ab, swap);
    EXPECT_EQ(ba.parties(), (std::vector<int>{3, 2}));
    EXPECT_LT(max_abs_diff(ba.matrix(), kron(b.matrix(), a.matrix())), 1e-15);
}

TEST(StatesProperty, IsotropicMixIsAffine) {
    proptest::Generator gen(42);
    for (int trial = 0; trial < 50; ++trial) {
        const DensityMatrix rho = random_density(4, 2, static_cast<std::uint64_t>(trial));
        const double p = gen.uniform(0.0, 1.0);
        const double q = gen.uniform(0.0, 1.0);
        EXPECT_LT(max_abs_diff(isotropic_mix(isotropic_mix(rho, p), q).matrix(), isotropic_mix(rho, p * q).matrix()), 1e-14);
    }
}
