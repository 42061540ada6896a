#pragma once

// Ancilla-qubit Ramsey measurement of a HW observable.
//
// The composite space is system x qubit (system most significant). Qubit
// matrices use the basis order (up, down): index 0 is |up>, index 1 is |down>.
// In that order the normalized pi/2 rotation
//     R(phi) = (1/sqrt2) [[1, e^{i phi}], [-e^{-i phi}, 1]]
// and U_RM = R(0) U_alpha R(pi/4) give E_up - E_down = Q(l,m)/sqrt2 exactly.

#include "hwobs/bloch.hpp"
#include "hwobs/hw_basis.hpp"
#include "hwobs/numerics.hpp"
#include "hwobs/states.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <string>

namespace hwobs {

inline constexpr std::size_t kQubitUp = 0;
inline constexpr std::size_t kQubitDown = 1;

inline ComplexMatrix rotation(double phi) {
    const double s = 1.0 / std::numbers::sqrt2;
    return ComplexMatrix{{s, s * std::polar(1.0, phi)}, {-s * std::polar(1.0, -phi), s}};
}

/// U_alpha = I x |down><down| + D(p) x |up><up|.
inline ComplexMatrix conditional_displacement(const PhasePoint& p) {
    ComplexMatrix down(2, 2);
    down(kQubitDown, kQubitDown) = 1.0;
    ComplexMatrix up(2, 2);
    up(kQubitUp, kQubitUp) = 1.0;
    return kron(ComplexMatrix::identity(static_cast<std::size_t>(p.d())), down) + kron(displacement(p), up);
}

/// U_RM = R(0) U_alpha R(pi/4), rotations acting on the qubit only.
inline ComplexMatrix ramsey_unitary(const PhasePoint& p) {
    const auto id = ComplexMatrix::identity(static_cast<std::size_t>(p.d()));
    return kron(id, rotation(0.0)) * conditional_displacement(p) * kron(id, rotation(std::numbers::pi / 4));
}

struct Povm {
    ComplexMatrix up;
    ComplexMatrix down;
};

/// E_j = M_j^dagger M_j with M_j = <j| U_RM |down>.
inline Povm povm_elements(const PhasePoint& p) {
    const auto d = static_cast<std::size_t>(p.d());
    const ComplexMatrix u = ramsey_unitary(p);
    auto kraus = [&](std::size_t outcome) {
        ComplexMatrix m(d, d);
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = 0; b < d; ++b) m(a, b) = u(a * 2 + outcome, b * 2 + kQubitDown);
        return m;
    };
    const ComplexMatrix mu = kraus(kQubitUp);
    const ComplexMatrix md = kraus(kQubitDown);
    return {adjoint(mu) * mu, adjoint(md) * md};
}

struct OutcomeProbabilities {
    double up;
    double down;
};

inline OutcomeProbabilities exact_probabilities(const DensityMatrix& rho, const PhasePoint& p) {
    if (rho.dimension() != p.d()) {
        throw DimensionError("state dimension " + std::to_string(rho.dimension()) + " does not match d=" + std::to_string(p.d()));
    }
    const Povm e = povm_elements(p);
    const OutcomeProbabilities pr{expectation(rho.matrix(), e.up), expectation(rho.matrix(), e.down)};
    constexpr double slack = 1e-9;
    if (pr.up < -slack || pr.up > 1 + slack || pr.down < -slack || pr.down > 1 + slack ||
        std::abs(pr.up + pr.down - 1.0) > kStructuralTol) {
        throw InconsistencyError("Ramsey outcome probabilities out of range: up=" + std::to_string(pr.up) +
                                 " down=" + std::to_string(pr.down));
    }
    return pr;
}

struct MeasurementRecord {
    std::int64_t shots = 0;
    std::int64_t count_up = 0;
    std::int64_t count_down = 0;
    std::uint64_t seed = 0;
    PhasePoint point{2, 0, 0};

    friend bool operator==(const MeasurementRecord&, const MeasurementRecord&) = default;
};

inline void validate(const MeasurementRecord& r) {
    if (r.shots < 1) throw ValidationError("record must have at least one shot");
    if (r.count_up < 0 || r.count_down < 0 || r.count_up + r.count_down != r.shots) {
        throw ValidationError("record counts " + std::to_string(r.count_up) + " + " + std::to_string(r.count_down) +
                              " do not add up to " + std::to_string(r.shots) + " shots");
    }
}

/// Bernoulli draws with success probability `p_up`; the stream depends only on
/// (seed, point), never on call order.
inline MeasurementRecord sample_outcomes(double p_up, const PhasePoint& p, std::int64_t shots, std::uint64_t seed) {
    if (shots < 1) throw ValidationError("shots must be >= 1, got " + std::to_string(shots));
    auto rng = detail::seeded_engine(seed, {0x5A3Du, static_cast<std::uint32_t>(p.d()), static_cast<std::uint32_t>(p.l()),
                                            static_cast<std::uint32_t>(p.m())});
    std::int64_t up = 0;
    for (std::int64_t s = 0; s < shots; ++s) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;  // uniform in [0, 1)
        if (u < p_up) ++up;
    }
    return {shots, up, shots - up, seed, p};
}

inline MeasurementRecord sample(const DensityMatrix& rho, const PhasePoint& p, std::int64_t shots, std::uint64_t seed) {
    return sample_outcomes(exact_probabilities(rho, p).up, p, shots, seed);
}

/// sqrt2 (n_up - n_down) / shots, unbiased for <Q(p)>.
inline double estimate(const MeasurementRecord& r) {
    validate(r);
    return std::numbers::sqrt2 * static_cast<double>(r.count_up - r.count_down) / static_cast<double>(r.shots);
}

/// Ramsey estimate of every Bloch component. `shots_per_point == nullopt`
/// uses the exact probabilities (infinite statistics).
inline BlochVector estimate_bloch(const DensityMatrix& rho, std::optional<std::int64_t> shots_per_point, std::uint64_t seed) {
    if (rho.party_count() != 1) throw DimensionError("estimate_bloch expects a single-party state");
    if (shots_per_point && *shots_per_point < 1) throw ValidationError("shots per point must be >= 1");
    const int d = rho.dimension();
    BlochVector v{d, std::vector<double>(BlochVector::length_for(d))};
    for (const auto& p : nonidentity_points(d)) {
        const auto pr = exact_probabilities(rho, p);
        v[p] = shots_per_point ? estimate(sample_outcomes(pr.up, p, *shots_per_point, seed))
                               : std::numbers::sqrt2 * (pr.up - pr.down);
    }
    return v;
}

}  // namespace hwobs
