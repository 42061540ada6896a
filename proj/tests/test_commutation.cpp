#include "hwobs/commutation.hpp"
#include "support/generators.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

using namespace hwobs;

namespace {

double anticommutator_norm(const PhasePoint& a, const PhasePoint& b) {
    return operator_infinity_norm(anticommutator(hw_observable(a).matrix, hw_observable(b).matrix));
}

double commutator_norm(const PhasePoint& a, const PhasePoint& b) {
    return operator_infinity_norm(commutator(hw_observable(a).matrix, hw_observable(b).matrix));
}

bool contains_triple(const std::vector<std::array<PhasePoint, 3>>& triples, std::array<PhasePoint, 3> t) {
    std::sort(t.begin(), t.end());
    return std::find(triples.begin(), triples.end(), t) != triples.end();
}

}  // namespace

TEST(CrossProduct, SelfCrossIsZero) {
    const Amplitude a{0.3, -1.7};
    EXPECT_EQ(cross_product(a, a), 0.0);
}

TEST(CrossProduct, QubitZAndX) {
    const double c = cross_product(amplitude_of({2, 1, 0}), amplitude_of({2, 0, 1}));
    EXPECT_NEAR(std::abs(c), std::numbers::pi / 2.0, 1e-15);
}

TEST(CrossProduct, QuartExampleAmplitudes) {
    const Amplitude a1{std::sqrt(std::numbers::pi / 4.0), 0.0};
    const Amplitude a2{0.0, std::sqrt(std::numbers::pi)};
    EXPECT_NEAR(std::abs(cross_product(a1, a2)), std::numbers::pi / 2.0, 1e-15);
}

TEST(CrossProduct, DiscreteFormOnGrid) {
    for (int d = 2; d <= 6; ++d)
        for (const auto& a : nonidentity_points(d))
            for (const auto& b : nonidentity_points(d)) {
                const double expected = std::numbers::pi / d * (b.m() * a.l() - a.m() * b.l());
                EXPECT_NEAR(cross_product(amplitude_of(a), amplitude_of(b)), expected, 1e-12);
                EXPECT_EQ(symplectic_form(a, b), static_cast<long long>(a.l()) * b.m() - static_cast<long long>(a.m()) * b.l());
            }
}

TEST(ClassifyPair, QubitPaulisAnticommute) {
    const PairRelation r = classify_pair({2, 1, 0}, {2, 0, 1});
    EXPECT_EQ(r.kind, PairKind::Anticommuting);
    EXPECT_LT(r.residual, 1e-10);
    EXPECT_NEAR(r.cross, std::numbers::pi / 2.0, 1e-15);
}

TEST(ClassifyPair, QutritNeverAnticommutes) {
    for (const auto& a : nonidentity_points(3))
        for (const auto& b : nonidentity_points(3)) EXPECT_NE(classify_pair(a, b).kind, PairKind::Anticommuting);
}

TEST(ClassifyPair, QuartExamplePair) {
    const PairRelation r = classify_pair({4, 0, 1}, {4, 2, 0});
    EXPECT_EQ(r.kind, PairKind::Anticommuting);
    EXPECT_EQ(std::llabs(r.symplectic), 2);
    EXPECT_LT(r.residual, 1e-10);
}

TEST(ClassifyPair, SelfCommutes) {
    const PairRelation r = classify_pair({5, 2, 3}, {5, 2, 3});
    EXPECT_EQ(r.kind, PairKind::Commuting);
    EXPECT_LT(r.residual, 1e-10);
}

TEST(ClassifyPair, MixedDimensionsRejected) { EXPECT_THROW(classify_pair({3, 1, 0}, {4, 1, 0}), DimensionError); }

TEST(ClassifyPair, QuartOracleOverAllPairs) {
    // numeric oracle: norms alone decide the kind
    for (const auto& a : nonidentity_points(4))
        for (const auto& b : nonidentity_points(4)) {
            const double an = anticommutator_norm(a, b);
            const double cn = commutator_norm(a, b);
            const PairKind expected = cn < 1e-10 ? PairKind::Commuting : an < 1e-10 ? PairKind::Anticommuting : PairKind::Neither;
            EXPECT_EQ(pair_kind(a, b), expected) << a.to_string() << b.to_string();
        }
}

TEST(Triples, QubitHasExactlyThePauliTriple) {
    const auto t = find_anticommuting_triples(2);
    ASSERT_EQ(t.size(), 1u);
    EXPECT_TRUE(contains_triple(t, {PhasePoint(2, 0, 1), PhasePoint(2, 1, 0), PhasePoint(2, 1, 1)}));
}

TEST(Triples, QutritHasNone) { EXPECT_TRUE(find_anticommuting_triples(3).empty()); }

TEST(Triples, QuartContainsWitnessTriples) {
    const auto t = find_anticommuting_triples(4);
    EXPECT_TRUE(contains_triple(t, {PhasePoint(4, 0, 1), PhasePoint(4, 2, 0), PhasePoint(4, 2, 1)}));
    EXPECT_TRUE(contains_triple(t, {PhasePoint(4, 1, 0), PhasePoint(4, 0, 2), PhasePoint(4, 1, 2)}));
    EXPECT_TRUE(std::is_sorted(t.begin(), t.end()));
    EXPECT_EQ(t.size(), count_anticommuting_subsets(4, 3));
}

TEST(Triples, ExhaustiveCountMatchesBruteForce) {
    for (int d : {2, 4, 6}) {
        const auto pts = nonidentity_points(d);
        std::size_t brute = 0;
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = i + 1; j < pts.size(); ++j)
                for (std::size_t k = j + 1; k < pts.size(); ++k)
                    if (anticommutator_norm(pts[i], pts[j]) < 1e-10 && anticommutator_norm(pts[i], pts[k]) < 1e-10 &&
                        anticommutator_norm(pts[j], pts[k]) < 1e-10)
                        ++brute;
        EXPECT_EQ(find_anticommuting_triples(d).size(), brute) << d;
    }
}

TEST(MaxSet, SmallDimensions) {
    EXPECT_EQ(max_anticommuting_set_size(2), 3);
    EXPECT_EQ(max_anticommuting_set_size(3), 1);
    EXPECT_EQ(max_anticommuting_set_size(4), 3);
    EXPECT_EQ(count_anticommuting_subsets(4, 4), 0u);
}

TEST(MaxSet, QuartQuadruplesExhaustively) {
    // C(15,4) = 1365 quadruples, checked directly against the numeric norms
    const auto pts = nonidentity_points(4);
    std::size_t candidates = 0;
    std::size_t passing = 0;
    for (std::size_t a = 0; a < pts.size(); ++a)
        for (std::size_t b = a + 1; b < pts.size(); ++b)
            for (std::size_t c = b + 1; c < pts.size(); ++c)
                for (std::size_t e = c + 1; e < pts.size(); ++e) {
                    ++candidates;
                    const std::array<PhasePoint, 4> q{pts[a], pts[b], pts[c], pts[e]};
                    if (is_anticommuting_set(q)) ++passing;
                }
    EXPECT_EQ(candidates, 1365u);
    EXPECT_EQ(passing, 0u);
}

TEST(MaxSet, RefusesAboveCeiling) {
    EXPECT_THROW(max_anticommuting_set_size(9), ValidationError);
    EXPECT_EQ(max_anticommuting_set_size(9, 9), 1);
}

// --- properties -----------------------------------------------------------

TEST(CommutationProperty, ClassifierSoundness) {
    for (int d = 2; d <= 8; ++d) {
        const auto pts = nonidentity_points(d);
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = i; j < pts.size(); ++j) {
                const PairKind kind = pair_kind(pts[i], pts[j]);
                const double an = anticommutator_norm(pts[i], pts[j]);
                const double cn = commutator_norm(pts[i], pts[j]);
                switch (kind) {
                    case PairKind::Anticommuting: EXPECT_LT(an, 1e-10); break;
                    case PairKind::Commuting: EXPECT_LT(cn, 1e-10); break;
                    case PairKind::Neither:
                        EXPECT_GT(an, 1e-6);
                        EXPECT_GT(cn, 1e-6);
                        break;
                }
            }
    }
}

TEST(CommutationProperty, OddDimensionsHaveNoAnticommutingPairs) {
    for (int d : {3, 5, 7, 9}) {
        EXPECT_TRUE(find_anticommuting_triples(d).empty());
        EXPECT_EQ(count_anticommuting_subsets(d, 2), 0u) << d;
    }
}

TEST(CommutationProperty, NoFourSetInEvenDimensions) {
    for (int d : {2, 4, 6, 8}) {
        EXPECT_EQ(count_anticommuting_subsets(d, 4), 0u) << d;
        EXPECT_EQ(max_anticommuting_set_size(d), 3) << d;
    }
}

TEST(CommutationProperty, TensorParityRule) {
    proptest::Generator gen(31);
    for (int d : {2, 4}) {
        int anticommuting_seen = 0;
        for (int trial = 0; trial < 300; ++trial) {
            const PhasePoint a = gen.nonidentity_point(d), b = gen.nonidentity_point(d);
            const PhasePoint c = gen.nonidentity_point(d), e = gen.nonidentity_point(d);
            const PairKind k1 = pair_kind(a, c);
            const PairKind k2 = pair_kind(b, e);
            if (k1 == PairKind::Neither || k2 == PairKind::Neither) continue;
            const ComplexMatrix lhs = kron(hw_observable(a).matrix, hw_observable(b).matrix);
            const ComplexMatrix rhs = kron(hw_observable(c).matrix, hw_observable(e).matrix);
            const bool anticommutes = operator_infinity_norm(anticommutator(lhs, rhs)) < 1e-10;
            const bool odd = (k1 == PairKind::Anticommuting) != (k2 == PairKind::Anticommuting);
            EXPECT_EQ(anticommutes, odd) << a.to_string() << b.to_string() << c.to_string() << e.to_string();
            anticommuting_seen += anticommutes ? 1 : 0;
        }
        EXPECT_GT(anticommuting_seen, 0);
    }
}
