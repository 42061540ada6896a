#include "hwobs/hw_basis.hpp"
#include "hwobs/numerics.hpp"
#include "support/generators.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace hwobs;

namespace {

const Complex I1{0.0, 1.0};

ComplexMatrix pauli_x() { return {{0.0, 1.0}, {1.0, 0.0}}; }

}  // namespace

TEST(Matmul, IdentityIsNeutral) {
    proptest::Generator gen(1);
    const ComplexMatrix m = gen.matrix(2, 2);
    EXPECT_EQ(ComplexMatrix::identity(2) * m, m);
}

TEST(Matmul, PauliXSquaresToIdentity) { EXPECT_EQ(pauli_x() * pauli_x(), ComplexMatrix::identity(2)); }

TEST(Matmul, ClockShiftDifferByGlobalPhase) {
    // hand-built 3x3 clock and shift
    const Complex w = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
    const ComplexMatrix z{{1.0, 0.0, 0.0}, {0.0, w, 0.0}, {0.0, 0.0, w * w}};
    const ComplexMatrix x{{0.0, 0.0, 1.0}, {1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}};
    const ComplexMatrix zx = z * x;
    const ComplexMatrix xz = x * z;
    EXPECT_GT(max_abs_diff(zx, xz), 0.5);
    EXPECT_LT(max_abs_diff(zx, w * xz), 1e-15);
}

TEST(Matmul, ShapeMismatchNamesBothShapes) {
    try {
        (void)matmul(ComplexMatrix(2, 3), ComplexMatrix(2, 2));
        FAIL() << "expected DimensionError";
    } catch (const DimensionError& e) {
        const std::string msg = e.what();
        EXPECT_NE(msg.find("2x3"), std::string::npos) << msg;
        EXPECT_NE(msg.find("2x2"), std::string::npos) << msg;
    }
}

TEST(ComplexMatrix, RejectsBadEntries) {
    EXPECT_THROW(ComplexMatrix(2, 2, std::vector<Complex>(3)), DimensionError);
    EXPECT_THROW(ComplexMatrix(1, 1, {Complex{std::nan(""), 0.0}}), ValidationError);
    EXPECT_THROW(ComplexMatrix(1, 1, {Complex{0.0, INFINITY}}), ValidationError);
    EXPECT_THROW(ComplexMatrix(0, 2), DimensionError);
}

TEST(Basics, TraceOfIdentity) {
    for (std::size_t d = 1; d <= 6; ++d) EXPECT_EQ(trace(ComplexMatrix::identity(d)), Complex(static_cast<double>(d), 0.0));
}

TEST(Basics, AdjointIsInvolution) {
    proptest::Generator gen(2);
    const ComplexMatrix m = gen.matrix(3, 5);
    EXPECT_EQ(adjoint(adjoint(m)), m);
    EXPECT_EQ(adjoint(m).rows(), 5u);
}

TEST(Basics, FrobeniusInnerOfPauliX) { EXPECT_EQ(frobenius_inner(pauli_x(), pauli_x()), Complex(2.0, 0.0)); }

TEST(Basics, FrobeniusInnerIsConjugateLinearInFirstArgument) {
    const ComplexMatrix a{{I1}};
    const ComplexMatrix b{{1.0}};
    EXPECT_EQ(frobenius_inner(a, b), Complex(0.0, -1.0));
}

TEST(Basics, KronShapeAndEntries) {
    const ComplexMatrix a{{1.0, 2.0}};
    const ComplexMatrix b{{0.0}, {I1}, {3.0}};
    const ComplexMatrix k = kron(a, b);
    ASSERT_EQ(k.rows(), 3u);
    ASSERT_EQ(k.cols(), 2u);
    EXPECT_EQ(k(1, 0), I1);
    EXPECT_EQ(k(1, 1), 2.0 * I1);
    EXPECT_EQ(k(2, 1), Complex(6.0, 0.0));
}

TEST(Basics, ScaleAndAdd) {
    const ComplexMatrix a{{1.0, I1}};
    EXPECT_EQ(a + a, Complex(2.0, 0.0) * a);
    EXPECT_EQ(a - a, ComplexMatrix(1, 2));
    EXPECT_THROW(a + ComplexMatrix(2, 1), DimensionError);
}

TEST(HermitianEigenvalues, Diagonal) {
    const ComplexMatrix m{{1.0, 0.0}, {0.0, -1.0}};
    const auto ev = hermitian_eigenvalues(m);
    ASSERT_EQ(ev.size(), 2u);
    EXPECT_NEAR(ev[0], -1.0, 1e-15);
    EXPECT_NEAR(ev[1], 1.0, 1e-15);
}

TEST(HermitianEigenvalues, PauliX) {
    const auto ev = hermitian_eigenvalues(pauli_x());
    EXPECT_NEAR(ev[0], -1.0, 1e-14);
    EXPECT_NEAR(ev[1], 1.0, 1e-14);
}

TEST(HermitianEigenvalues, QutritObservableMagnitudesFromFormula) {
    const auto ev = hermitian_eigenvalues(hw_observable(3, 1, 1).matrix);
    const double expected[] = {1.0, (1.0 + std::sqrt(3.0)) / 2.0, (std::sqrt(3.0) - 1.0) / 2.0};
    for (double e : ev) {
        bool found = false;
        for (double f : expected) found = found || std::abs(std::abs(e) - f) < 1e-9;
        EXPECT_TRUE(found) << e;
    }
}

TEST(HermitianEigenvalues, RejectsNonHermitianWithMeasuredAsymmetry) {
    const ComplexMatrix m{{0.0, 1.0}, {0.5, 0.0}};
    try {
        (void)hermitian_eigenvalues(m);
        FAIL() << "expected ValidationError";
    } catch (const ValidationError& e) {
        EXPECT_NE(std::string(e.what()).find("0.5"), std::string::npos) << e.what();
    }
}

TEST(HermitianEigensystem, ReconstructionResidualIsSmall) {
    proptest::Generator gen(3);
    const auto sys = hermitian_eigensystem(gen.hermitian(8));
    EXPECT_LT(sys.reconstruction_residual, 1e-9);
    EXPECT_TRUE(std::is_sorted(sys.values.begin(), sys.values.end()));
}

TEST(OperatorNorm, Examples) {
    EXPECT_NEAR(operator_infinity_norm(ComplexMatrix::identity(5)), 1.0, 1e-14);
    const ComplexMatrix m{{3.0, 0.0}, {0.0, -5.0}};
    EXPECT_NEAR(operator_infinity_norm(m), 5.0, 1e-14);
    EXPECT_THROW((void)operator_infinity_norm(ComplexMatrix(2, 3)), DimensionError);
    EXPECT_EQ(operator_infinity_norm(anticommutator(hw_observable(2, 0, 1).matrix, hw_observable(2, 1, 0).matrix)), 0.0);
}

TEST(OperatorNorm, EqualsLargestEigenvalueMagnitudeForHermitian) {
    proptest::Generator gen(4);
    for (int trial = 0; trial < 20; ++trial) {
        const ComplexMatrix h = gen.hermitian(6);
        const auto ev = hermitian_eigenvalues(h);
        EXPECT_NEAR(operator_infinity_norm(h), std::max(std::abs(ev.front()), std::abs(ev.back())), 1e-10);
    }
}

// --- properties -----------------------------------------------------------

TEST(NumericsProperty, FrobeniusSelfInnerIsRealNonNegative) {
    proptest::Generator gen(10);
    for (int trial = 0; trial < 200; ++trial) {
        const ComplexMatrix a = gen.matrix(static_cast<std::size_t>(gen.integer(1, 6)), static_cast<std::size_t>(gen.integer(1, 6)));
        const Complex v = frobenius_inner(a, a);
        EXPECT_EQ(v.imag(), 0.0);
        EXPECT_GE(v.real(), 0.0);
    }
}

TEST(NumericsProperty, TraceIsCyclic) {
    proptest::Generator gen(11);
    for (int trial = 0; trial < 200; ++trial) {
        const ComplexMatrix a = gen.matrix(8, 8);
        const ComplexMatrix b = gen.matrix(8, 8);
        EXPECT_LT(std::abs(trace(a * b) - trace(b * a)), 1e-12);
    }
}

TEST(NumericsProperty, KronIsAssociativeOnIntegerMatrices) {
    proptest::Generator gen(12);
    for (int trial = 0; trial < 100; ++trial) {
        auto dim = [&] { return static_cast<std::size_t>(gen.integer(1, 3)); };
        const ComplexMatrix a = gen.integer_matrix(dim(), dim());
        const ComplexMatrix b = gen.integer_matrix(dim(), dim());
        const ComplexMatrix c = gen.integer_matrix(dim(), dim());
        EXPECT_EQ(kron(kron(a, b), c), kron(a, kron(b, c)));
    }
}

TEST(NumericsProperty, SpectrumIsUnitarilyInvariant) {
    proptest::Generator gen(13);
    for (int trial = 0; trial < 50; ++trial) {
        const auto n = static_cast<std::size_t>(gen.integer(2, 8));
        const ComplexMatrix m = gen.hermitian(n);
        const ComplexMatrix u = gen.unitary(n);
        ASSERT_LT(unitarity_defect(u), 1e-12);
        ComplexMatrix rotated = u * m * adjoint(u);
        // restore exact Hermiticity lost to rounding
        rotated = Complex{0.5, 0.0} * (rotated + adjoint(rotated));
        const auto a = hermitian_eigenvalues(m);
        const auto b = hermitian_eigenvalues(rotated);
        for (std::size_t k = 0; k < n; ++k) EXPECT_NEAR(a[k], b[k], 1e-9);
    }
}
