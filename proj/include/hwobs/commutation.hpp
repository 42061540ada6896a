#pragma once

// (Anti-)commutation of HW observables via the phase-space cross product.
//
// With c = l m' - m l' (the symplectic form of the two points),
//   D(p) D(p') = e^{i 2 pi c / d} D(p') D(p),
// so Q(p), Q(p') commute when c = 0 mod d and anticommute when 2c = d mod 2d.
// Classification is exact integer arithmetic; the numeric norms are only a
// cross-check.

#include "hwobs/hw_basis.hpp"
#include "hwobs/numerics.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <string>
#include <vector>

namespace hwobs {

enum class PairKind { Commuting, Anticommuting, Neither };

inline const char* to_string(PairKind k) {
    switch (k) {
        case PairKind::Commuting: return "commuting";
        case PairKind::Anticommuting: return "anticommuting";
        case PairKind::Neither: return "neither";
    }
    return "?";
}

struct PairRelation {
    PairKind kind;
    long long symplectic;  // l m' - m l' on canonical representatives
    double cross;          // |alpha x alpha'| = pi |c| / d
    double residual;       // ||{Q,Q'}|| for Anticommuting, ||[Q,Q']|| otherwise
};

/// alpha x alpha' = Im(alpha conj(alpha')); equals (pi/d)(m' l - m l') on the grid.
inline double cross_product(const Amplitude& a, const Amplitude& b) { return a.im * b.re - a.re * b.im; }

inline long long symplectic_form(const PhasePoint& a, const PhasePoint& b) {
    return static_cast<long long>(a.l()) * b.m() - static_cast<long long>(a.m()) * b.l();
}

namespace detail {

inline void require_same_dimension(const PhasePoint& a, const PhasePoint& b) {
    if (a.d() != b.d()) {
        throw DimensionError("phase points from different dimensions: d=" + std::to_string(a.d()) + " and d=" +
                             std::to_string(b.d()));
    }
}

}  // namespace detail

/// Integer-only classification (no numeric verification).
inline PairKind pair_kind(const PhasePoint& a, const PhasePoint& b) {
    detail::require_same_dimension(a, b);
    const long long d = a.d();
    const long long c = std::llabs(symplectic_form(a, b));
    if (c > (d - 1) * (d - 1)) throw InconsistencyError("symplectic form exceeds (d-1)^2 on canonical points");
    if (c % d == 0) return PairKind::Commuting;
    if ((2 * c) % d == 0 && ((2 * c) / d) % 2 == 1) return PairKind::Anticommuting;
    return PairKind::Neither;
}

inline PairRelation classify_pair(const PhasePoint& a, const PhasePoint& b) {
    const PairKind kind = pair_kind(a, b);
    const long long c = symplectic_form(a, b);
    const ComplexMatrix qa = hw_observable(a).matrix;
    const ComplexMatrix qb = hw_observable(b).matrix;
    const double residual = kind == PairKind::Anticommuting ? operator_infinity_norm(anticommutator(qa, qb))
                                                            : operator_infinity_norm(commutator(qa, qb));
    return {kind, c, std::abs(cross_product(amplitude_of(a), amplitude_of(b))), residual};
}

/// Pairwise test over a whole set (integer arithmetic only).
inline bool is_anticommuting_set(std::span<const PhasePoint> pts) {
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (pair_kind(pts[i], pts[j]) != PairKind::Anticommuting) return false;
    return true;
}

namespace detail {

/// adjacency[i][j] for non-identity points i, j in canonical order.
inline std::vector<std::vector<char>> anticommutation_graph(const std::vector<PhasePoint>& pts) {
    std::vector<std::vector<char>> adj(pts.size(), std::vector<char>(pts.size(), 0));
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            adj[i][j] = adj[j][i] = pair_kind(pts[i], pts[j]) == PairKind::Anticommuting ? 1 : 0;
    return adj;
}

inline void verify_numerically(std::span<const PhasePoint> pts) {
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            const double n = operator_infinity_norm(
                anticommutator(hw_observable(pts[i]).matrix, hw_observable(pts[j]).matrix));
            if (n >= kStructuralTol) {
                throw InconsistencyError("points " + pts[i].to_string() + " and " + pts[j].to_string() +
                                         " classified anticommuting but ||{Q,Q'}|| = " + std::to_string(n));
            }
        }
}

}  // namespace detail

/// All pairwise-anticommuting triples of non-identity points, sorted, each
/// verified numerically. Empty for odd d.
inline std::vector<std::array<PhasePoint, 3>> find_anticommuting_triples(int d) {
    const auto pts = nonidentity_points(d);
    const auto adj = detail::anticommutation_graph(pts);
    std::vector<std::array<PhasePoint, 3>> out;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            if (!adj[i][j]) continue;
            for (std::size_t k = j + 1; k < pts.size(); ++k) {
                if (adj[i][k] && adj[j][k]) {
                    std::array<PhasePoint, 3> t{pts[i], pts[j], pts[k]};
                    detail::verify_numerically(t);
                    out.push_back(t);
                }
            }
        }
    return out;
}

/// Number of pairwise-anticommuting subsets of exactly `size` non-identity points.
inline std::size_t count_anticommuting_subsets(int d, std::size_t size) {
    const auto pts = nonidentity_points(d);
    const auto adj = detail::anticommutation_graph(pts);
    std::size_t count = 0;
    std::vector<std::size_t> chosen;
    auto extend = [&](auto&& self, std::size_t start) -> void {
        if (chosen.size() == size) {
            ++count;
            return;
        }
        for (std::size_t v = start; v < pts.size(); ++v) {
            if (std::all_of(chosen.begin(), chosen.end(), [&](std::size_t u) { return adj[u][v] != 0; })) {
                chosen.push_back(v);
                self(self, v + 1);
                chosen.pop_back();
            }
        }
    };
    if (size == 0) return 1;
    extend(extend, 0);
    return count;
}

inline constexpr int kDefaultSearchCeiling = 8;

/// Size of the largest pairwise-anticommuting set of non-identity points
/// (exhaustive clique search). A singleton counts, so odd d reports 1.
inline int max_anticommuting_set_size(int d, int ceiling = kDefaultSearchCeiling) {
    require_dimension(d);
    if (d > ceiling) {
        throw ValidationError("exhaustive anticommuting-set search refused for d=" + std::to_string(d) +
                              " (ceiling " + std::to_string(ceiling) + ")");
    }
    const auto pts = nonidentity_points(d);
    const auto adj = detail::anticommutation_graph(pts);
    std::size_t best = 0;
    std::vector<std::size_t> chosen;
    auto extend = [&](auto&& self, std::size_t start) -> void {
        best = std::max(best, chosen.size());
        for (std::size_t v = start; v < pts.size(); ++v) {
            if (std::all_of(chosen.begin(), chosen.end(), [&](std::size_t u) { return adj[u][v] != 0; })) {
                chosen.push_back(v);
                self(self, v + 1);
                chosen.pop_back();
            }
        }
    };
    extend(extend, 0);
    const int result = static_cast<int>(best);
    if (result > 3 || (d % 2 == 0 && result != 3) || (d % 2 == 1 && result != 1)) {
        throw InconsistencyError("largest anticommuting set for d=" + std::to_string(d) + " has size " +
                                 std::to_string(result));
    }
    return result;
}

}  // namespace hwobs
