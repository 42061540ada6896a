#pragma once

// Density matrices, their real Bloch vectors in the HW observable basis, and
// multipartite correlations.
//
// Normalization: Tr{Q Q'} = d delta, so rho = (1/d)(I + sum_p <Q(p)> Q(p)) and
// Tr{rho^2} = (1 + |v|^2)/d. The generalized Gell-Mann matrices provided for
// comparison use the textbook Tr{lambda lambda'} = 2 delta instead; on the
// maximally entangled state their correlations are 2/d rather than 1.

#include "hwobs/hw_basis.hpp"
#include "hwobs/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <vector>

namespace hwobs {

enum class Positivity {
    Enforce,  // reject min eigenvalue < -kSpectralTol
    Report,   // record min eigenvalue only
};

class DensityMatrix {
public:
    /// Validates Hermiticity and unit trace (1e-10) and, with Positivity::Enforce,
    /// min eigenvalue >= -1e-9. An empty `parties` means a single party.
    static DensityMatrix create(ComplexMatrix matrix, std::vector<int> parties = {},
                                Positivity positivity = Positivity::Enforce) {
        if (!matrix.is_square()) throw ValidationError("density matrix must be square, got " + matrix.shape_string());
        const auto dim = static_cast<int>(matrix.rows());
        if (parties.empty()) parties.push_back(dim);
        for (int p : parties) {
            if (p < 2) throw ValidationError("party dimension must be >= 2, got " + std::to_string(p));
        }
        const long long product =
            std::accumulate(parties.begin(), parties.end(), 1LL, std::multiplies<long long>());
        if (product != dim) {
            throw DimensionError("party dimensions multiply to " + std::to_string(product) + " but matrix is " +
                                 matrix.shape_string());
        }
        const double defect = hermiticity_defect(matrix);
        if (defect > kStructuralTol) {
            std::ostringstream os;
            os << "density matrix violates Hermiticity: max |rho - rho^dagger| = " << defect;
            throw ValidationError(os.str());
        }
        const Complex tr = trace(matrix);
        if (std::abs(tr - Complex{1.0, 0.0}) > kStructuralTol) {
            std::ostringstream os;
            os.precision(17);
            os << "density matrix violates unit trace: Tr = " << tr.real() << (tr.imag() < 0 ? " - " : " + ")
               << std::abs(tr.imag()) << "i";
            throw ValidationError(os.str());
        }
        const double min_eig = hermitian_eigenvalues(matrix).front();
        if (positivity == Positivity::Enforce && min_eig < -kSpectralTol) {
            std::ostringstream os;
            os << "density matrix violates positivity: min eigenvalue = " << min_eig;
            throw ValidationError(os.str());
        }
        return DensityMatrix(std::move(matrix), std::move(parties), min_eig);
    }

    const ComplexMatrix& matrix() const noexcept { return matrix_; }
    const std::vector<int>& parties() const noexcept { return parties_; }
    int dimension() const noexcept { return static_cast<int>(matrix_.rows()); }
    std::size_t party_count() const noexcept { return parties_.size(); }
    double min_eigenvalue() const noexcept { return min_eigenvalue_; }
    bool is_positive() const noexcept { return min_eigenvalue_ >= -kSpectralTol; }

private:
    DensityMatrix(ComplexMatrix m, std::vector<int> parties, double min_eig)
        : matrix_(std::move(m)), parties_(std::move(parties)), min_eigenvalue_(min_eig) {}

    ComplexMatrix matrix_;
    std::vector<int> parties_;
    double min_eigenvalue_;
};

/// Components <Q(p)> for every p != (0,0), in canonical order (index() - 1).
struct BlochVector {
    int d = 2;
    std::vector<double> components;

    static std::size_t length_for(int d) { return static_cast<std::size_t>(d) * d - 1; }

    double& operator[](const PhasePoint& p) { return components.at(static_cast<std::size_t>(p.index()) - 1); }
    double operator[](const PhasePoint& p) const { return components.at(static_cast<std::size_t>(p.index()) - 1); }

    double norm_squared() const {
        return std::inner_product(components.begin(), components.end(), components.begin(), 0.0);
    }

    friend bool operator==(const BlochVector&, const BlochVector&) = default;
};

inline double purity(const DensityMatrix& rho) { return trace_of_product(rho.matrix(), rho.matrix()).real(); }

/// <A> = Tr{rho A}; throws if the imaginary residue exceeds `tol`.
inline double expectation(const ComplexMatrix& rho, const ComplexMatrix& op, double tol = kSpectralTol) {
    const Complex v = trace_of_product(rho, op);
    if (std::abs(v.imag()) > tol) {
        std::ostringstream os;
        os << "expectation value has imaginary part " << v.imag() << "; operator not Hermitian?";
        throw ValidationError(os.str());
    }
    return v.real();
}

inline BlochVector decompose(const DensityMatrix& rho) {
    if (rho.party_count() != 1) {
        throw DimensionError("decompose expects a single-party state, got " + std::to_string(rho.party_count()) +
                             " parties");
    }
    const int d = rho.dimension();
    BlochVector v{d, std::vector<double>(BlochVector::length_for(d))};
    for (const auto& p : nonidentity_points(d)) v[p] = expectation(rho.matrix(), hw_observable(p).matrix, kStructuralTol);
    return v;
}

/// (1/d)(I + sum_p v[p] Q(p)). Positivity is reported, not enforced.
inline DensityMatrix reconstruct(const BlochVector& v) {
    require_dimension(v.d);
    if (v.components.size() != BlochVector::length_for(v.d)) {
        throw DimensionError("Bloch vector for d=" + std::to_string(v.d) + " needs " +
                             std::to_string(BlochVector::length_for(v.d)) + " components, got " +
                             std::to_string(v.components.size()));
    }
    ComplexMatrix m = ComplexMatrix::identity(v.d);
    for (const auto& p : nonidentity_points(v.d)) {
        const double c = v[p];
        if (c != 0.0) m += hw_observable(p).matrix * Complex{c, 0.0};
    }
    m *= 1.0 / v.d;
    return DensityMatrix::create(std::move(m), {}, Positivity::Report);
}

/// Tr{rho (op_1 x op_2 x ...)}, one operator per party.
inline double correlation(const DensityMatrix& rho, std::span<const ComplexMatrix> ops) {
    if (ops.size() != rho.party_count()) {
        throw DimensionError("correlation needs " + std::to_string(rho.party_count()) + " operators, got " +
                             std::to_string(ops.size()));
    }
    for (std::size_t k = 0; k < ops.size(); ++k) {
        if (!ops[k].is_square() || static_cast<int>(ops[k].rows()) != rho.parties()[k]) {
            throw DimensionError("operator for party " + std::to_string(k) + " has shape " + ops[k].shape_string() +
                                 " but the party dimension is " + std::to_string(rho.parties()[k]));
        }
    }
    return expectation(rho.matrix(), kron(ops));
}

/// Correlation of HW observables labelled by phase points; Q(0,0) is the identity.
inline double correlation(const DensityMatrix& rho, std::span<const PhasePoint> points) {
    std::vector<ComplexMatrix> ops;
    ops.reserve(points.size());
    for (const auto& p : points) ops.push_back(hw_observable(p).matrix);
    return correlation(rho, ops);
}

/// conj(Q(l,m)) = sign * Q(point).
struct ConjugatedObservable {
    PhasePoint point;
    int sign;
    ComplexMatrix matrix;
};

/// Label of the entrywise conjugate: (l, -m mod d), i.e. the point of -alpha*,
/// with sign (-1)^l when m != 0 (the phase e^{-i pi l m/d} is not d-periodic).
inline std::pair<PhasePoint, int> conjugate_label(const PhasePoint& p) {
    const PhasePoint label(p.d(), p.l(), -static_cast<long long>(p.m()));
    const int sign = (p.m() != 0 && p.l() % 2 != 0) ? -1 : 1;
    return {label, sign};
}

inline ConjugatedObservable conjugate_observable(const HWObservable& q) {
    auto [label, sign] = conjugate_label(q.point);
    return {label, sign, conjugate(q.matrix)};
}

/// Generalized Gell-Mann matrices, Tr{lambda_i lambda_j} = 2 delta_ij. Order:
/// symmetric (j<k), antisymmetric (j<k), then diagonal l = 1..d-1.
inline std::vector<ComplexMatrix> gell_mann_basis(int d) {
    require_dimension(d);
    std::vector<ComplexMatrix> out;
    out.reserve(static_cast<std::size_t>(d) * d - 1);
    for (int j = 0; j < d; ++j)
        for (int k = j + 1; k < d; ++k) {
            ComplexMatrix m(d, d);
            m(j, k) = 1.0;
            m(k, j) = 1.0;
            out.push_back(std::move(m));
        }
    for (int j = 0; j < d; ++j)
        for (int k = j + 1; k < d; ++k) {
            ComplexMatrix m(d, d);
            m(j, k) = Complex{0.0, -1.0};
            m(k, j) = Complex{0.0, 1.0};
            out.push_back(std::move(m));
        }
    for (int l = 1; l < d; ++l) {
        ComplexMatrix m(d, d);
        const double norm = std::sqrt(2.0 / (l * (l + 1.0)));
        for (int j = 0; j < l; ++j) m(j, j) = norm;
        m(l, l) = -l * norm;
        out.push_back(std::move(m));
    }
    return out;
}

/// Reduced state of party `keep` (big-endian party order).
inline DensityMatrix partial_trace(const DensityMatrix& rho, std::size_t keep) {
    const auto& dims = rho.parties();
    if (keep >= dims.size()) throw DimensionError("party index " + std::to_string(keep) + " out of range");
    const int dk = dims[keep];
    int before = 1;
    int after = 1;
    for (std::size_t k = 0; k < keep; ++k) before *= dims[k];
    for (std::size_t k = keep + 1; k < dims.size(); ++k) after *= dims[k];
    ComplexMatrix out(dk, dk);
    for (int a = 0; a < dk; ++a)
        for (int b = 0; b < dk; ++b) {
            Complex s{};
            for (int x = 0; x < before; ++x)
                for (int y = 0; y < after; ++y) {
                    const auto row = static_cast<std::size_t>((x * dk + a) * after + y);
                    const auto col = static_cast<std::size_t>((x * dk + b) * after + y);
                    s += rho.matrix()(row, col);
                }
            out(a, b) = s;
        }
    return DensityMatrix::create(std::move(out), {}, Positivity::Report);
}

}  // namespace hwobs
