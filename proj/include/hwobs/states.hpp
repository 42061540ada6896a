#pragma once

// Reference states, white-noise mixing and seeded random states.
// Composite indices are big-endian: the first party is the most significant factor.

#include "hwobs/bloch.hpp"
#include "hwobs/numerics.hpp"

#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace hwobs {

inline DensityMatrix pure_state(std::span<const Complex> ket, std::vector<int> parties = {}) {
    double norm2 = 0.0;
    for (const auto& a : ket) norm2 += std::norm(a);
    if (ket.empty() || norm2 <= 0.0) throw ValidationError("ket must be non-empty and non-zero");
    const double scale = 1.0 / norm2;
    ComplexMatrix m(ket.size(), ket.size());
    for (std::size_t i = 0; i < ket.size(); ++i)
        for (std::size_t j = 0; j < ket.size(); ++j) m(i, j) = ket[i] * std::conj(ket[j]) * scale;
    return DensityMatrix::create(std::move(m), std::move(parties));
}

/// (1/sqrt(d)) sum_j |j>^{x n}.
inline DensityMatrix ghz(int parties, int d) {
    require_dimension(d);
    if (parties < 2) throw ValidationError("GHZ state needs at least 2 parties, got " + std::to_string(parties));
    std::size_t dim = 1;
    for (int k = 0; k < parties; ++k) dim *= static_cast<std::size_t>(d);
    // index of |j j ... j> is j * (1 + d + d^2 + ...)
    std::size_t stride = 0;
    for (std::size_t k = 0, pw = 1; k < static_cast<std::size_t>(parties); ++k, pw *= static_cast<std::size_t>(d)) stride += pw;
    std::vector<Complex> ket(dim);
    for (int j = 0; j < d; ++j) ket[static_cast<std::size_t>(j) * stride] = 1.0 / std::sqrt(static_cast<double>(d));
    return pure_state(ket, std::vector<int>(static_cast<std::size_t>(parties), d));
}

/// |phi_d> = (1/sqrt(d)) sum_j |j>|j>.
inline DensityMatrix max_entangled(int d) { return ghz(2, d); }

inline DensityMatrix max_mixed(std::vector<int> parties) {
    if (parties.empty()) throw ValidationError("max_mixed needs at least one party");
    const int dim = std::accumulate(parties.begin(), parties.end(), 1, std::multiplies<int>());
    ComplexMatrix m = ComplexMatrix::identity(static_cast<std::size_t>(dim));
    m *= 1.0 / dim;
    return DensityMatrix::create(std::move(m), std::move(parties));
}

/// p rho + (1 - p) I / D.
inline DensityMatrix isotropic_mix(const DensityMatrix& rho, double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("mixing fraction must lie in [0, 1], got " + std::to_string(p));
    const int dim = rho.dimension();
    ComplexMatrix m = rho.matrix() * Complex{p, 0.0};
    for (int i = 0; i < dim; ++i) m(i, i) += (1.0 - p) / dim;
    return DensityMatrix::create(std::move(m), rho.parties());
}

/// Reorders parties: new party k is old party perm[k].
inline DensityMatrix permute_parties(const DensityMatrix& rho, std::span<const int> perm) {
    const auto& dims = rho.parties();
    const std::size_t n = dims.size();
    if (perm.size() != n) throw DimensionError("permutation length does not match party count");
    std::vector<char> seen(n, 0);
    for (int p : perm) {
        if (p < 0 || static_cast<std::size_t>(p) >= n || seen[static_cast<std::size_t>(p)]) {
            throw ValidationError("invalid party permutation");
        }
        seen[static_cast<std::size_t>(p)] = 1;
    }
    std::vector<int> new_dims(n);
    for (std::size_t k = 0; k < n; ++k) new_dims[k] = dims[static_cast<std::size_t>(perm[k])];
    const std::size_t dim = rho.matrix().rows();
    // map new flat index -> old flat index
    std::vector<std::size_t> to_old(dim);
    std::vector<int> digits(n);
    for (std::size_t idx = 0; idx < dim; ++idx) {
        std::size_t rest = idx;
        for (std::size_t k = n; k-- > 0;) {
            digits[k] = static_cast<int>(rest % static_cast<std::size_t>(new_dims[k]));
            rest /= static_cast<std::size_t>(new_dims[k]);
        }
        std::vector<int> old_digits(n);
        for (std::size_t k = 0; k < n; ++k) old_digits[static_cast<std::size_t>(perm[k])] = digits[k];
        std::size_t old = 0;
        for (std::size_t k = 0; k < n; ++k) old = old * static_cast<std::size_t>(dims[k]) + static_cast<std::size_t>(old_digits[k]);
        to_old[idx] = old;
    }
    ComplexMatrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) m(i, j) = rho.matrix()(to_old[i], to_old[j]);
    return DensityMatrix::create(std::move(m), std::move(new_dims));
}

namespace detail {

inline std::mt19937_64 seeded_engine(std::uint64_t seed, std::initializer_list<std::uint32_t> salt = {}) {
    std::vector<std::uint32_t> words{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
    words.insert(words.end(), salt.begin(), salt.end());
    std::seed_seq seq(words.begin(), words.end());
    return std::mt19937_64(seq);
}

inline ComplexMatrix random_gaussian_density(int d, int rank, std::mt19937_64& rng) {
    std::normal_distribution<double> normal;
    ComplexMatrix g(static_cast<std::size_t>(d), static_cast<std::size_t>(rank));
    for (auto& z : g.entries()) {
        const double re = normal(rng);
        const double im = normal(rng);
        z = {re, im};
    }
    ComplexMatrix m = g * adjoint(g);
    // exact Hermiticity before normalization
    for (std::size_t i = 0; i < m.rows(); ++i) {
        m(i, i) = m(i, i).real();
        for (std::size_t j = i + 1; j < m.cols(); ++j) m(j, i) = std::conj(m(i, j));
    }
    m *= 1.0 / trace(m).real();
    return m;
}

}  // namespace detail

/// G G^dagger / Tr with G a seeded d x rank complex Gaussian matrix.
inline DensityMatrix random_density(int d, int rank, std::uint64_t seed) {
    require_dimension(d);
    if (rank < 1 || rank > d) {
        throw ValidationError("rank must lie in [1, " + std::to_string(d) + "], got " + std::to_string(rank));
    }
    auto rng = detail::seeded_engine(seed, {static_cast<std::uint32_t>(d), static_cast<std::uint32_t>(rank)});
    return DensityMatrix::create(detail::random_gaussian_density(d, rank, rng));
}

/// Tensor product of independent full-rank random local states.
inline DensityMatrix random_product_state(std::vector<int> dims, std::uint64_t seed) {
    if (dims.empty()) throw ValidationError("random_product_state needs at least one party");
    std::vector<ComplexMatrix> locals;
    for (std::size_t k = 0; k < dims.size(); ++k) {
        require_dimension(dims[k]);
        auto rng = detail::seeded_engine(seed, {0xB10Cu, static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(dims[k])});
        locals.push_back(detail::random_gaussian_density(dims[k], dims[k], rng));
    }
    return DensityMatrix::create(kron(locals), std::move(dims));
}

enum class StateKind { MaxEntangled, GHZ, MaxMixed, PureKet, IsotropicMix };

inline const char* to_string(StateKind k) {
    switch (k) {
        case StateKind::MaxEntangled: return "max_entangled";
        case StateKind::GHZ: return "ghz";
        case StateKind::MaxMixed: return "max_mixed";
        case StateKind::PureKet: return "pure_ket";
        case StateKind::IsotropicMix: return "isotropic_mix";
    }
    return "?";
}

/// Declarative description of a reference state.
///   MaxEntangled: |phi_d>, uses `dimension`.
///   GHZ:          `parties` copies of dimension `dimension`.
///   MaxMixed:     I/D over `parties` copies of `dimension`.
///   PureKet:      `ket` over `parties` copies of `dimension`.
///   IsotropicMix: p * GHZ(parties, dimension) + (1 - p) I / D.
struct StateSpec {
    StateKind kind = StateKind::MaxEntangled;
    int dimension = 2;
    int parties = 2;
    double p = 1.0;
    std::vector<Complex> ket{};

    friend bool operator==(const StateSpec&, const StateSpec&) = default;
};

inline void validate(const StateSpec& s) {
    require_dimension(s.dimension);
    if (s.parties < 1) throw ValidationError("party count must be >= 1");
    if (!(s.p >= 0.0 && s.p <= 1.0)) throw ValidationError("mixing fraction must lie in [0, 1]");
    if ((s.kind == StateKind::GHZ || s.kind == StateKind::IsotropicMix || s.kind == StateKind::MaxEntangled) &&
        s.parties < 2) {
        throw ValidationError(std::string(to_string(s.kind)) + " needs at least 2 parties");
    }
    if (s.kind == StateKind::MaxEntangled && s.parties != 2) {
        throw ValidationError("max_entangled needs exactly 2 parties, got " + std::to_string(s.parties));
    }
    if (s.kind == StateKind::PureKet) {
        std::size_t dim = 1;
        for (int k = 0; k < s.parties; ++k) dim *= static_cast<std::size_t>(s.dimension);
        if (s.ket.size() != dim) {
            throw DimensionError("ket has " + std::to_string(s.ket.size()) + " amplitudes, expected " + std::to_string(dim));
        }
    }
}

inline DensityMatrix make_state(const StateSpec& s) {
    validate(s);
    const std::vector<int> dims(static_cast<std::size_t>(s.parties), s.dimension);
    switch (s.kind) {
        case StateKind::MaxEntangled: return max_entangled(s.dimension);
        case StateKind::GHZ: return ghz(s.parties, s.dimension);
        case StateKind::MaxMixed: return max_mixed(dims);
        case StateKind::PureKet: return pure_state(s.ket, dims);
        case StateKind::IsotropicMix: return isotropic_mix(ghz(s.parties, s.dimension), s.p);
    }
    throw ValidationError("unknown state kind");
}

}  // namespace hwobs
