#pragma once

// Clock/shift operators, discrete displacement operators D(l,m) and the
// Hermitian Heisenberg-Weyl observables Q(l,m) = chi D + chi* D^dagger.

#include "hwobs/numerics.hpp"

#include <cmath>
#include <compare>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

namespace hwobs {

/// chi = (1 + i)/2. The (1 - i)/2 branch also yields an orthogonal basis; this
/// one reproduces the tabulated d = 3 and d = 4 matrices entrywise.
inline constexpr Complex kChi{0.5, 0.5};

inline void require_dimension(int d) {
    if (d < 2) throw DimensionError("dimension must be >= 2, got " + std::to_string(d));
}

/// A point (l, m) of the discrete d x d phase-space grid. Coordinates are
/// reduced mod d on construction.
class PhasePoint {
public:
    PhasePoint(int d, long long l, long long m) : d_(d) {
        require_dimension(d);
        l_ = reduce(l);
        m_ = reduce(m);
    }

    int d() const noexcept { return d_; }
    int l() const noexcept { return l_; }
    int m() const noexcept { return m_; }

    /// Position in the canonical row-major order, identity at 0.
    int index() const noexcept { return l_ * d_ + m_; }
    bool is_origin() const noexcept { return l_ == 0 && m_ == 0; }

    static PhasePoint from_index(int d, int index) { return {d, index / d, index % d}; }

    PhasePoint operator+(const PhasePoint& o) const { return {d_, l_ + o.l(), m_ + o.m()}; }
    PhasePoint operator-() const { return {d_, -static_cast<long long>(l_), -static_cast<long long>(m_)}; }

    std::string to_string() const { return "(" + std::to_string(l_) + "," + std::to_string(m_) + ")"; }

    friend auto operator<=>(const PhasePoint&, const PhasePoint&) = default;

private:
    int reduce(long long v) const {
        const long long r = v % d_;
        return static_cast<int>(r < 0 ? r + d_ : r);
    }

    int d_;
    int l_ = 0;
    int m_ = 0;
};

/// Displacement amplitude alpha = sqrt(pi/d) (m + i l).
struct Amplitude {
    double re = 0.0;
    double im = 0.0;

    friend bool operator==(const Amplitude&, const Amplitude&) = default;
};

struct HWObservable {
    PhasePoint point;
    ComplexMatrix matrix;
};

namespace detail {

/// e^{i 2 pi k / n} with k reduced mod n first; quarter turns are exact.
inline Complex root_of_unity(long long k, long long n) {
    long long r = k % n;
    if (r < 0) r += n;
    if ((4 * r) % n == 0) {
        constexpr Complex quarter[] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
        return quarter[(4 * r) / n];
    }
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(n));
}

}  // namespace detail

/// Z = diag(1, w, ..., w^{d-1}), w = e^{i 2 pi / d}.
inline ComplexMatrix clock_matrix(int d) {
    require_dimension(d);
    ComplexMatrix z(d, d);
    for (int j = 0; j < d; ++j) z(j, j) = detail::root_of_unity(j, d);
    return z;
}

/// X|j> = |j+1 mod d>.
inline ComplexMatrix shift_matrix(int d) {
    require_dimension(d);
    ComplexMatrix x(d, d);
    for (int j = 0; j < d; ++j) x((j + 1) % d, j) = 1.0;
    return x;
}

/// D(l,m) = Z^l X^m e^{-i pi l m / d}, using the canonical representatives
/// 0 <= l, m < d. The phase is not d-periodic in (l, m), so the choice matters.
inline ComplexMatrix displacement(const PhasePoint& p) {
    const int d = p.d();
    const int l = p.l();
    const int m = p.m();
    ComplexMatrix out(d, d);
    // (Z^l X^m)_{ij} = w^{l i} when i = j + m mod d; with the phase the entry
    // is e^{i pi (2 l i - l m) / d}, evaluated as a single 2d-th root of unity.
    for (int j = 0; j < d; ++j) {
        const int i = (j + m) % d;
        out(i, j) = detail::root_of_unity(2LL * l * i - static_cast<long long>(l) * m, 2LL * d);
    }
    return out;
}

inline HWObservable hw_observable(const PhasePoint& p) {
    if (p.is_origin()) return {p, ComplexMatrix::identity(p.d())};
    const ComplexMatrix dm = displacement(p);
    // chi*conj(z) == conj(chi*z) in IEEE arithmetic, so the result is exactly Hermitian.
    return {p, kChi * dm + std::conj(kChi) * adjoint(dm)};
}

inline HWObservable hw_observable(int d, long long l, long long m) { return hw_observable(PhasePoint(d, l, m)); }

/// All d^2 observables in row-major (l, m) order; Q(0,0) = I first.
inline std::vector<HWObservable> full_basis(int d) {
    require_dimension(d);
    std::vector<HWObservable> basis;
    basis.reserve(static_cast<std::size_t>(d) * d);
    for (int idx = 0; idx < d * d; ++idx) basis.push_back(hw_observable(PhasePoint::from_index(d, idx)));
    return basis;
}

/// Non-identity points in canonical order.
inline std::vector<PhasePoint> nonidentity_points(int d) {
    require_dimension(d);
    std::vector<PhasePoint> pts;
    pts.reserve(static_cast<std::size_t>(d) * d - 1);
    for (int idx = 1; idx < d * d; ++idx) pts.push_back(PhasePoint::from_index(d, idx));
    return pts;
}

inline Amplitude amplitude_of(const PhasePoint& p) {
    const double scale = std::sqrt(std::numbers::pi / p.d());
    return {scale * p.m(), scale * p.l()};
}

/// Inverse of amplitude_of. Accepts any integer multiple of sqrt(pi/d) in each
/// component (reduced mod d); anything else is off-grid.
inline PhasePoint phase_point_of(const Amplitude& a, int d) {
    require_dimension(d);
    constexpr double kGridTol = 1e-9;
    const double scale = std::sqrt(std::numbers::pi / d);
    const double m = a.re / scale;
    const double l = a.im / scale;
    if (!std::isfinite(m) || !std::isfinite(l)) throw ValidationError("amplitude is not finite");
    const double mr = std::round(m);
    const double lr = std::round(l);
    if (std::abs(m - mr) > kGridTol || std::abs(l - lr) > kGridTol) {
        PhasePoint nearest(d, static_cast<long long>(lr), static_cast<long long>(mr));
        std::ostringstream os;
        os.precision(17);
        os << "amplitude (" << a.re << ", " << a.im << ") is off the d=" << d
           << " grid; nearest grid point is (l,m)=" << nearest.to_string();
        throw ValidationError(os.str());
    }
    return {d, static_cast<long long>(lr), static_cast<long long>(mr)};
}

/// Ascending eigenvalues of the observable.
inline std::vector<double> spectrum(const HWObservable& q) { return hermitian_eigenvalues(q.matrix); }

/// q_max(d)^2 = 1 + max_{0 <= n < d} sin(4 pi n / d).
inline double q_max_squared(int d) {
    require_dimension(d);
    double best = 0.0;
    for (int n = 0; n < d; ++n) best = std::max(best, std::sin(4.0 * std::numbers::pi * n / d));
    return 1.0 + best;
}

inline double q_max(int d) { return std::sqrt(q_max_squared(d)); }

/// The closed-form eigenvalue magnitudes sqrt(1 + sin(4 pi n / d)), n = 0..d-1.
inline std::vector<double> spectrum_magnitudes_formula(int d) {
    require_dimension(d);
    std::vector<double> out;
    out.reserve(d);
    for (int n = 0; n < d; ++n) out.push_back(std::sqrt(std::max(0.0, 1.0 + std::sin(4.0 * std::numbers::pi * n / d))));
    return out;
}

}  // namespace hwobs
