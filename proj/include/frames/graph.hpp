#pragma once

// The orthogonality graph on planes of a non-degenerate symplectic space,
// and the counting machinery built on it: walks by pair class, the 6x6
// transition counts mu, and an exact spectrum certificate.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "frames/exact.hpp"
#include "frames/planes.hpp"

namespace frames::graph {

using planes::PairCase;
using planes::Plane;
using symp::SympSpace;

using VertexId = std::uint32_t;

inline constexpr std::uint64_t kDefaultSeed = 1729;

class OrthoGraph {
public:
    /// Enumerates the planes of sp and connects orthogonal pairs.
    /// Throws std::invalid_argument when sp.r() > 0 or sp.n() < 2.
    static OrthoGraph build(const SympSpace& sp);

    OrthoGraph(SympSpace sp, std::vector<Plane> vertices);

    const SympSpace& space() const noexcept { return space_; }
    const std::vector<Plane>& vertices() const noexcept { return vertices_; }
    const Plane& vertex(VertexId v) const { return vertices_[v]; }
    std::size_t size() const noexcept { return vertices_.size(); }

    /// Sorted neighbor ids.
    std::span<const VertexId> neighbors(VertexId v) const noexcept {
        return {nbrs_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
    }
    bool adjacent(VertexId a, VertexId b) const;

    bool is_regular() const noexcept { return regular_; }
    /// Degree of vertex 0 (the common degree when regular).
    std::uint64_t degree() const noexcept { return degree_; }
    std::size_t edge_count() const noexcept { return nbrs_.size() / 2; }

    /// Bitset rows are kept for graphs with at most 2^16 vertices.
    bool has_bitsets() const noexcept { return words_ != 0; }
    std::size_t words_per_row() const noexcept { return words_; }
    std::span<const std::uint64_t> bit_row(VertexId v) const noexcept {
        return {bits_.data() + static_cast<std::size_t>(v) * words_, words_};
    }

private:
    SympSpace space_;
    std::vector<Plane> vertices_;
    std::vector<std::size_t> offsets_;
    std::vector<VertexId> nbrs_;
    std::vector<std::uint64_t> bits_;
    std::size_t words_ = 0;
    std::uint64_t degree_ = 0;
    bool regular_ = true;
};

// ---------------------------------------------------------------------------
// Connectivity

struct ComponentReport {
    /// Components ordered by their smallest vertex id.
    std::vector<std::size_t> sizes;
    std::vector<int> diameters;

    std::size_t count() const noexcept { return sizes.size(); }
};

ComponentReport components_and_diameter(const OrthoGraph& g);

// ---------------------------------------------------------------------------
// Walks

/// Number of walks of length r from source to every vertex.
/// Throws std::overflow_error when degree^r does not fit in 64 bits.
std::vector<std::uint64_t> walk_counts(const OrthoGraph& g, VertexId source, int r);

struct WalkVector {
    /// l_{i,r}, slot i-1 for class i; 0 for classes with no member.
    std::array<std::uint64_t, 6> counts{};
    std::array<bool, 6> realized{};
    /// Every target in a class received the same count.
    bool class_constant = true;
};

WalkVector walk_vector(const OrthoGraph& g, VertexId source, int r);

// ---------------------------------------------------------------------------
// Transition counts mu

/// For the pair (S, W): how many T adjacent to S fall in each class of (T, W).
std::array<std::uint64_t, 6> mu_counts(const OrthoGraph& g, VertexId s, VertexId w);

struct SamplingPolicy {
    bool exhaustive = true;
    std::size_t samples_per_class = 25;
    std::uint64_t seed = kDefaultSeed;

    /// Exhaustive for at most 1000 vertices, seeded sampling beyond.
    static SamplingPolicy for_graph(const OrthoGraph& g, std::size_t samples = 25,
                                    std::uint64_t seed = kDefaultSeed);
};

struct MuRow {
    bool realized = false;
    std::array<std::uint64_t, 6> counts{};
    std::uint64_t pairs = 0;
    bool constant = true;

    std::uint64_t row_sum() const noexcept {
        std::uint64_t s = 0;
        for (auto c : counts) s += c;
        return s;
    }
};

struct EmpiricalMu {
    std::array<MuRow, 6> rows;
    SamplingPolicy policy;

    bool all_constant() const noexcept {
        for (const auto& r : rows)
            if (!r.constant) return false;
        return true;
    }
};

EmpiricalMu empirical_mu(const OrthoGraph& g, const SamplingPolicy& policy);

struct Mu5Check {
    std::uint64_t empirical = 0;
    Rational formula;
    int sum_dim = 0;
    bool psi_ws_us_nonzero = false;

    bool agree() const { return Rational(empirical) == formula; }
};

Mu5Check mu5_check(const OrthoGraph& g, VertexId s, VertexId w);

// ---------------------------------------------------------------------------
// Degenerate sums W + T

/// The unique (x, y) in T with psi(x,y) = 1, psi(x,w) = 1 = psi(y,u),
/// psi(x,u) = 0 = psi(y,w), where (w, u) is W's cached symplectic basis;
/// nothing when W + T is non-degenerate.
std::optional<symp::SymplecticPair> degenerate_sum_witness(const SympSpace& sp, const Plane& w,
                                                           const Plane& t);

/// Every pair in T satisfying the witness conditions, by search over all
/// symplectic bases of T.
std::vector<symp::SymplecticPair> witness_pairs_exhaustive(const SympSpace& sp, const Plane& w,
                                                           const Plane& t);

// ---------------------------------------------------------------------------
// Spectrum

struct SpectrumCertificate {
    std::vector<long long> eigenvalues;
    std::vector<BigInt> multiplicities;  // empty when the Vandermonde solve failed
    std::vector<BigInt> traces;          // tr(A^k), k = 0..
    /// Coefficients (low degree first) of prod over eigenvalues with nonzero multiplicity.
    std::vector<BigInt> minimal_polynomial;
    bool annihilation_verified = false;
    bool multiplicities_integral = false;
    bool multiplicities_nonnegative = false;
    bool moments_ok = false;
    Rational lambda_min_normalized;
    std::string arithmetic;  // "int64" or "multimodular:<k>"
    std::vector<std::string> failures;

    bool passed() const noexcept {
        return annihilation_verified && multiplicities_integral && multiplicities_nonnegative &&
               moments_ok;
    }
};

/// Checks prod (A - lambda I) = 0 over the integers for the candidate list,
/// then recovers multiplicities from tr(A^k) by an exact Vandermonde solve.
SpectrumCertificate spectrum_certificate(const OrthoGraph& g, std::span<const long long> candidates);

}  // namespace frames::graph
