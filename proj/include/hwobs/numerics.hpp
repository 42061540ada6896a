#pragma once

// Dense complex matrices and the handful of spectral routines the rest of the
// library needs. Problems here are small (d <= 81), so everything is a plain
// row-major buffer; Eigen is used only for eigen/singular value problems.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hwobs {

using Complex = std::complex<double>;

/// Absolute tolerance for structural checks (Hermiticity, unitarity, trace).
inline constexpr double kStructuralTol = 1e-10;
/// Absolute tolerance for spectral comparisons.
inline constexpr double kSpectralTol = 1e-9;

/// Shapes of operands do not fit the operation.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A value violates a documented invariant (Hermiticity, normalization, ...).
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal cross-check failed; indicates a bug rather than bad input.
class InconsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class ComplexMatrix {
public:
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Complex{0.0, 0.0}) {
        require_positive();
    }

    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        require_positive();
        if (entries_.size() != rows_ * cols_) {
            throw DimensionError("matrix entries length " + std::to_string(entries_.size()) +
                                 " does not match shape " + shape_string());
        }
        for (const auto& z : entries_) {
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
                throw ValidationError("matrix entry is not finite");
            }
        }
    }

    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) : rows_(rows.size()), cols_(0) {
        if (rows_ > 0) cols_ = rows.begin()->size();
        require_positive();
        entries_.reserve(rows_ * cols_);
        for (const auto& row : rows) {
            if (row.size() != cols_) throw DimensionError("ragged matrix literal");
            entries_.insert(entries_.end(), row.begin(), row.end());
        }
    }

    static ComplexMatrix identity(std::size_t n) {
        ComplexMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    static ComplexMatrix diagonal(std::span<const Complex> values) {
        ComplexMatrix m(values.size(), values.size());
        for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    std::span<const Complex> entries() const noexcept { return entries_; }
    std::span<Complex> entries() noexcept { return entries_; }

    std::string shape_string() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

    ComplexMatrix& operator+=(const ComplexMatrix& other) {
        require_same_shape(other, "add");
        for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
        return *this;
    }

    ComplexMatrix& operator-=(const ComplexMatrix& other) {
        require_same_shape(other, "subtract");
        for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
        return *this;
    }

    ComplexMatrix& operator*=(Complex factor) {
        for (auto& z : entries_) z *= factor;
        return *this;
    }

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator-(ComplexMatrix a) { return a *= -1.0; }

    friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

private:
    void require_positive() const {
        if (rows_ == 0 || cols_ == 0) throw DimensionError("matrix shape must be positive, got " + shape_string());
    }

    void require_same_shape(const ComplexMatrix& other, const char* what) const {
        if (rows_ != other.rows_ || cols_ != other.cols_) {
            throw DimensionError(std::string("cannot ") + what + " matrices of shape " + shape_string() + " and " +
                                 other.shape_string());
        }
    }

    std::size_t rows_;
    std::size_t cols_;
    std::vector<Complex> entries_;
};

inline ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) {
        throw DimensionError("matmul shape mismatch: " + a.shape_string() + " times " + b.shape_string());
    }
    ComplexMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    }
    return c;
}

inline ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) { return matmul(a, b); }

inline ComplexMatrix adjoint(const ComplexMatrix& a) {
    ComplexMatrix r(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = std::conj(a(i, j));
    return r;
}

inline ComplexMatrix transpose(const ComplexMatrix& a) {
    ComplexMatrix r(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = a(i, j);
    return r;
}

/// Entrywise complex conjugate.
inline ComplexMatrix conjugate(const ComplexMatrix& a) {
    ComplexMatrix r = a;
    for (auto& z : r.entries()) z = std::conj(z);
    return r;
}

inline Complex trace(const ComplexMatrix& a) {
    if (!a.is_square()) throw DimensionError("trace of non-square matrix " + a.shape_string());
    Complex t{};
    for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
    return t;
}

/// Tr{a * b} without forming the product.
inline Complex trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows() || a.rows() != b.cols()) {
        throw DimensionError("trace_of_product shape mismatch: " + a.shape_string() + " and " + b.shape_string());
    }
    Complex t{};
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) t += a(i, k) * b(k, i);
    return t;
}

inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Complex aij = a(i, j);
            if (aij == Complex{}) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l) r(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return r;
}

/// Left-to-right Kronecker product; the first factor is the most significant index.
inline ComplexMatrix kron(std::span<const ComplexMatrix> factors) {
    if (factors.empty()) throw DimensionError("kron of an empty factor list");
    ComplexMatrix r = factors.front();
    for (std::size_t k = 1; k < factors.size(); ++k) r = kron(r, factors[k]);
    return r;
}

/// Tr{a^dagger b}.
inline Complex frobenius_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError("frobenius_inner shape mismatch: " + a.shape_string() + " and " + b.shape_string());
    }
    Complex s{};
    for (std::size_t k = 0; k < a.entries().size(); ++k) s += std::conj(a.entries()[k]) * b.entries()[k];
    return s;
}

inline ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) { return a * b - b * a; }
inline ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b) { return a * b + b * a; }

/// Largest entry modulus.
inline double max_abs(const ComplexMatrix& a) {
    double m = 0.0;
    for (const auto& z : a.entries()) m = std::max(m, std::abs(z));
    return m;
}

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError("cannot compare matrices of shape " + a.shape_string() + " and " + b.shape_string());
    }
    double m = 0.0;
    for (std::size_t k = 0; k < a.entries().size(); ++k) m = std::max(m, std::abs(a.entries()[k] - b.entries()[k]));
    return m;
}

/// max |a - a^dagger| entrywise.
inline double hermiticity_defect(const ComplexMatrix& a) {
    if (!a.is_square()) throw DimensionError("Hermiticity of non-square matrix " + a.shape_string());
    double m = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = i; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j) - std::conj(a(j, i))));
    return m;
}

inline bool is_hermitian(const ComplexMatrix& a, double tol = kStructuralTol) {
    return a.is_square() && hermiticity_defect(a) <= tol;
}

/// max |u^dagger u - I| entrywise.
inline double unitarity_defect(const ComplexMatrix& u) {
    if (!u.is_square()) throw DimensionError("unitarity of non-square matrix " + u.shape_string());
    return max_abs_diff(adjoint(u) * u, ComplexMatrix::identity(u.rows()));
}

inline Eigen::MatrixXcd to_eigen(const ComplexMatrix& a) {
    Eigen::MatrixXcd m(static_cast<Eigen::Index>(a.rows()), static_cast<Eigen::Index>(a.cols()));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = a(i, j);
    return m;
}

inline ComplexMatrix from_eigen(const Eigen::MatrixXcd& m) {
    ComplexMatrix a(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) a(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = m(i, j);
    return a;
}

struct HermitianEigensystem {
    std::vector<double> values;  // ascending
    ComplexMatrix vectors;       // columns are eigenvectors
    double reconstruction_residual;
};

namespace detail {

inline void require_hermitian(const ComplexMatrix& a, const char* what) {
    if (!a.is_square()) throw DimensionError(std::string(what) + " requires a square matrix, got " + a.shape_string());
    const double defect = hermiticity_defect(a);
    if (defect > kStructuralTol) {
        std::ostringstream os;
        os << what << " requires a Hermitian matrix; max |a - a^dagger| = " << defect;
        throw ValidationError(os.str());
    }
}

}  // namespace detail

inline HermitianEigensystem hermitian_eigensystem(const ComplexMatrix& a) {
    detail::require_hermitian(a, "hermitian_eigensystem");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_eigen(a), Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success) throw InconsistencyError("Hermitian eigensolver did not converge");
    HermitianEigensystem out{std::vector<double>(solver.eigenvalues().data(),
                                                 solver.eigenvalues().data() + solver.eigenvalues().size()),
                              from_eigen(solver.eigenvectors()), 0.0};
    const Eigen::MatrixXcd rebuilt = solver.eigenvectors() * solver.eigenvalues().cast<Complex>().asDiagonal() *
                                     solver.eigenvectors().adjoint();
    out.reconstruction_residual = max_abs_diff(from_eigen(rebuilt), a);
    if (out.reconstruction_residual > kSpectralTol) {
        throw InconsistencyError("eigendecomposition residual " + std::to_string(out.reconstruction_residual) +
                                 " exceeds tolerance");
    }
    return out;
}

/// Eigenvalues of a Hermitian matrix, ascending.
inline std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a) {
    detail::require_hermitian(a, "hermitian_eigenvalues");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_eigen(a), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw InconsistencyError("Hermitian eigensolver did not converge");
    const auto& ev = solver.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

/// Operator norm induced by the Euclidean vector norm (largest singular value).
inline double operator_infinity_norm(const ComplexMatrix& a) {
    if (!a.is_square()) throw DimensionError("operator_infinity_norm requires a square matrix, got " + a.shape_string());
    if (max_abs(a) == 0.0) return 0.0;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(a));
    return svd.singularValues()(0);
}

}  // namespace hwobs
