#pragma once

// Anti-commutativity bound on Bloch components and the sum-of-moduli
// entanglement witnesses built from it.
//
// For a set of Hermitian, mutually orthogonal observables lambda_i with
// components c_i = <lambda_i> / Tr{lambda_i^2}:
//
//   sum_i c_i^2 <= (max_i <lambda_i^2> + K) / (min_i Tr{lambda_i^2})^2,
//   K = (1/2) sqrt( sum_{i != j} <{lambda_i, lambda_j}>^2 ).
//
// K is replaced by the state-independent (1/2) sqrt(sum ||{lambda_i,lambda_j}||^2)
// and <lambda_i^2> by ||lambda_i^2|| when no state is given. For the HW basis
// this reads sum <Q_i>^2 <= q_max^2 + K.
//
// The bound for a set of local HW observables holds for every party of a
// product state; Cauchy-Schwarz then bounds sum_i |<A_i x B_i>| by
// sqrt(bound_A bound_B), and convexity extends it to separable states.

#include "hwobs/bloch.hpp"
#include "hwobs/hw_basis.hpp"
#include "hwobs/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace hwobs {

struct LabeledObservable {
    std::string label;
    ComplexMatrix matrix;
};

class ObservableSet {
public:
    /// Members must be Hermitian (1e-10) and pairwise Frobenius-orthogonal (1e-9).
    explicit ObservableSet(std::vector<LabeledObservable> members) : members_(std::move(members)) {
        if (members_.empty()) throw ValidationError("observable set must be non-empty");
        const auto dim = members_.front().matrix.rows();
        for (const auto& m : members_) {
            if (!m.matrix.is_square() || m.matrix.rows() != dim) {
                throw DimensionError("observable '" + m.label + "' has shape " + m.matrix.shape_string() +
                                     ", expected " + std::to_string(dim) + "x" + std::to_string(dim));
            }
            const double defect = hermiticity_defect(m.matrix);
            if (defect > kStructuralTol) {
                throw ValidationError("observable '" + m.label + "' is not Hermitian (defect " + std::to_string(defect) + ")");
            }
        }
        for (std::size_t i = 0; i < members_.size(); ++i)
            for (std::size_t j = i + 1; j < members_.size(); ++j) {
                const double overlap = std::abs(trace_of_product(members_[i].matrix, members_[j].matrix));
                if (overlap > kSpectralTol) {
                    throw ValidationError("observables '" + members_[i].label + "' and '" + members_[j].label +
                                          "' are not orthogonal (|Tr| = " + std::to_string(overlap) + ")");
                }
            }
        dimension_ = static_cast<int>(dim);
    }

    /// Set of HW observables Q(p) on one d-level party.
    static ObservableSet from_hw(int d, std::span<const PhasePoint> points) {
        std::vector<LabeledObservable> members;
        for (const auto& p : points) {
            if (p.d() != d) throw DimensionError("phase point " + p.to_string() + " is not on the d=" + std::to_string(d) + " grid");
            members.push_back({"Q" + p.to_string(), hw_observable(p).matrix});
        }
        ObservableSet s(std::move(members));
        s.hw_dimension_ = d;
        return s;
    }

    int dimension() const noexcept { return dimension_; }
    std::size_t size() const noexcept { return members_.size(); }
    const std::vector<LabeledObservable>& members() const noexcept { return members_; }
    /// Set when every member is a HW observable of this dimension.
    std::optional<int> hw_dimension() const noexcept { return hw_dimension_; }

    /// min_i Tr{lambda_i^2}; equals d for HW sets.
    double normalization() const {
        double n = std::numeric_limits<double>::infinity();
        for (const auto& m : members_) n = std::min(n, trace_of_product(m.matrix, m.matrix).real());
        return n;
    }

private:
    std::vector<LabeledObservable> members_;
    int dimension_ = 0;
    std::optional<int> hw_dimension_;
};

/// How sum_{i != j} is read: ordered pairs count each unordered pair twice.
enum class PairCounting { Ordered, Unordered };

namespace detail {

template <typename PairTerm>
double half_root_pair_sum(const ObservableSet& set, PairCounting counting, PairTerm&& term) {
    double sum = 0.0;
    const auto& ms = set.members();
    for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = i + 1; j < ms.size(); ++j) {
            const double t = term(ms[i].matrix, ms[j].matrix);
            sum += t * t;
        }
    if (counting == PairCounting::Ordered) sum *= 2.0;
    return 0.5 * std::sqrt(sum);
}

inline void require_matching(const DensityMatrix& rho, const ObservableSet& set) {
    if (rho.dimension() != set.dimension()) {
        throw DimensionError("state dimension " + std::to_string(rho.dimension()) + " does not match observable dimension " +
                             std::to_string(set.dimension()));
    }
}

}  // namespace detail

inline double k_exact(const DensityMatrix& rho, const ObservableSet& set, PairCounting counting = PairCounting::Ordered) {
    detail::require_matching(rho, set);
    return detail::half_root_pair_sum(set, counting, [&](const ComplexMatrix& a, const ComplexMatrix& b) {
        return expectation(rho.matrix(), anticommutator(a, b));
    });
}

inline double k_opnorm(const ObservableSet& set, PairCounting counting = PairCounting::Ordered) {
    return detail::half_root_pair_sum(set, counting, [](const ComplexMatrix& a, const ComplexMatrix& b) {
        return operator_infinity_norm(anticommutator(a, b));
    });
}

struct TheoremBound {
    double max_square;     // max_i <lambda_i^2>, or max_i ||lambda_i^2||
    double k;              // k_exact or k_opnorm
    double normalization;  // min_i Tr{lambda_i^2}
    double bound;          // (max_square + k) / normalization^2
};

/// State-independent worst case.
inline TheoremBound theorem_bound(const ObservableSet& set, PairCounting counting = PairCounting::Ordered) {
    double max_square = 0.0;
    for (const auto& m : set.members()) {
        max_square = std::max(max_square, operator_infinity_norm(m.matrix * m.matrix));
    }
    const double k = k_opnorm(set, counting);
    const double n = set.normalization();
    return {max_square, k, n, (max_square + k) / (n * n)};
}

inline TheoremBound theorem_bound(const ObservableSet& set, const DensityMatrix& rho,
                                  PairCounting counting = PairCounting::Ordered) {
    detail::require_matching(rho, set);
    double max_square = -std::numeric_limits<double>::infinity();
    for (const auto& m : set.members()) max_square = std::max(max_square, expectation(rho.matrix(), m.matrix * m.matrix));
    const double k = k_exact(rho, set, counting);
    const double n = set.normalization();
    return {max_square, k, n, (max_square + k) / (n * n)};
}

/// sum_i c_i^2 with c_i = <lambda_i> / Tr{lambda_i^2}.
inline double component_square_sum(const DensityMatrix& rho, const ObservableSet& set) {
    detail::require_matching(rho, set);
    double s = 0.0;
    for (const auto& m : set.members()) {
        const double c = expectation(rho.matrix(), m.matrix) / trace_of_product(m.matrix, m.matrix).real();
        s += c * c;
    }
    return s;
}

/// Upper bound on sum_i <lambda_i>^2 over all states. HW sets use q_max(d)^2
/// for the square term; other sets use max_i ||lambda_i^2||.
inline double local_square_bound(const ObservableSet& set, PairCounting counting = PairCounting::Ordered) {
    const TheoremBound tb = theorem_bound(set, counting);
    const double square = set.hw_dimension() ? q_max_squared(*set.hw_dimension()) : tb.max_square;
    return (square + tb.k) * static_cast<double>(set.dimension()) * set.dimension() / (tb.normalization * tb.normalization);
}

/// Separable bound sqrt(bound_A bound_B) for sum_i |<A_i x B_i>|.
inline double build_separable_bound(const ObservableSet& a, const ObservableSet& b,
                                    PairCounting counting = PairCounting::Ordered) {
    return std::sqrt(local_square_bound(a, counting) * local_square_bound(b, counting));
}

// ---------------------------------------------------------------------------
// Witnesses

enum class BoundKind { Separable, Biseparable };

inline const char* to_string(BoundKind k) { return k == BoundKind::Separable ? "separable" : "biseparable"; }

/// One correlation term: a HW observable per party; (0,0) is the identity.
struct WitnessTerm {
    std::vector<PhasePoint> factors;

    friend auto operator<=>(const WitnessTerm&, const WitnessTerm&) = default;
};

struct WitnessSpec {
    std::vector<int> parties;
    std::vector<WitnessTerm> terms;
    double bound = 1.0;
    BoundKind bound_kind = BoundKind::Separable;
    std::map<std::string, std::string> metadata;

    friend bool operator==(const WitnessSpec&, const WitnessSpec&) = default;
};

inline void validate(const WitnessSpec& spec) {
    if (spec.parties.empty()) throw ValidationError("witness has no parties");
    for (int d : spec.parties) require_dimension(d);
    if (spec.terms.empty()) throw ValidationError("witness has no terms");
    if (!(spec.bound > 0.0) || !std::isfinite(spec.bound)) throw ValidationError("witness bound must be positive and finite");
    for (std::size_t t = 0; t < spec.terms.size(); ++t) {
        const auto& f = spec.terms[t].factors;
        if (f.size() != spec.parties.size()) {
            throw DimensionError("witness term " + std::to_string(t) + " has " + std::to_string(f.size()) +
                                 " factors for " + std::to_string(spec.parties.size()) + " parties");
        }
        for (std::size_t k = 0; k < f.size(); ++k) {
            if (f[k].d() != spec.parties[k]) {
                throw DimensionError("witness term " + std::to_string(t) + " factor " + std::to_string(k) +
                                     " has d=" + std::to_string(f[k].d()) + ", party has d=" + std::to_string(spec.parties[k]));
            }
        }
    }
}

struct WitnessReport {
    double value = 0.0;            // sum of |correlation|
    double bound = 0.0;
    bool violated = false;         // value > bound + 1e-9
    double noise_threshold = 0.0;  // critical state fraction p_crit = bound / value
    double tolerable_noise = 0.0;  // max(0, 1 - p_crit)
    std::vector<double> term_values;
};

inline WitnessReport evaluate_witness(const DensityMatrix& rho, const WitnessSpec& spec) {
    validate(spec);
    if (rho.parties() != spec.parties) throw DimensionError("state party dimensions do not match the witness");
    WitnessReport r;
    r.bound = spec.bound;
    for (const auto& term : spec.terms) {
        const double c = correlation(rho, term.factors);
        r.term_values.push_back(c);
        r.value += std::abs(c);
    }
    r.violated = r.value > r.bound + kSpectralTol;
    r.noise_threshold = r.value > 0.0 ? r.bound / r.value : std::numeric_limits<double>::infinity();
    r.tolerable_noise = std::max(0.0, 1.0 - r.noise_threshold);
    return r;
}

/// All distinct party permutations of each term, deduplicated, in first-seen order.
inline std::vector<WitnessTerm> symmetrize_terms(std::span<const WitnessTerm> terms) {
    std::vector<WitnessTerm> out;
    std::set<WitnessTerm> seen;
    for (const auto& t : terms) {
        std::vector<std::size_t> order(t.factors.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        do {
            WitnessTerm p;
            for (std::size_t k : order) p.factors.push_back(t.factors[k]);
            if (seen.insert(p).second) out.push_back(std::move(p));
        } while (std::next_permutation(order.begin(), order.end()));
    }
    return out;
}

}  // namespace hwobs
