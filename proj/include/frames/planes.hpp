#pragma once

// Non-degenerate 2-dimensional subspaces ("planes"): canonical form,
// enumeration, and the six-way classification of ordered pairs.

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "frames/symp.hpp"

namespace frames::planes {

using symp::SympSpace;
using symp::Vector;

inline constexpr std::uint32_t kNoId = std::numeric_limits<std::uint32_t>::max();

/// Encoded RREF rows; identical keys <=> identical planes.
struct PlaneKey {
    std::uint64_t first = 0;
    std::uint64_t second = 0;

    friend auto operator<=>(const PlaneKey&, const PlaneKey&) = default;
};

struct PlaneKeyHash {
    std::size_t operator()(const PlaneKey& k) const noexcept {
        return std::hash<std::uint64_t>{}(k.first * 0x9e3779b97f4a7c15ull ^ k.second);
    }
};

struct Plane {
    std::array<Vector, 2> rref;
    /// (rref[0], rref[1] / psi(rref[0], rref[1])), so psi(x, y) = 1.
    symp::SymplecticPair sbasis;
    PlaneKey key;
    std::uint32_t id = kNoId;

    symp::SubspaceBasis basis(const SympSpace& sp) const;

    friend bool operator==(const Plane& a, const Plane& b) noexcept { return a.key == b.key; }
};

/// The six pairwise-disjoint configurations of an ordered pair (S, W).
enum class PairCase : std::uint8_t {
    identical = 1,       // S = W
    meet_in_line = 2,    // dim(S+W) = 3
    degenerate_sum = 3,  // dim(S+W) = 4, S+W degenerate
    orthogonal = 4,      // S perp W
    circ_vanishes = 5,   // S+W non-degenerate, not orthogonal, w o_S u = 0
    generic = 6,         // dim(S+W) = 4, non-degenerate, not orthogonal, w o_S u != 0
};

inline int case_number(PairCase c) noexcept { return static_cast<int>(c); }
/// 0-based slot for arrays indexed by case.
inline std::size_t case_slot(PairCase c) noexcept { return static_cast<std::size_t>(c) - 1; }

/// |E_1(S)|, ..., |E_6(S)|.
using CaseCensus = std::array<std::uint64_t, 6>;

/// Throws std::invalid_argument if v1, v2 are dependent or span a degenerate plane.
Plane canonical_plane(const SympSpace& sp, const Vector& v1, const Vector& v2);
Plane plane_from_key(const SympSpace& sp, PlaneKey key);

/// All planes of sp sorted by key, with ids 0..N-1 in that order.
std::vector<Plane> enumerate_planes(const SympSpace& sp);

class PlaneLookup {
public:
    explicit PlaneLookup(std::span<const Plane> planes);
    std::optional<std::uint32_t> find(const PlaneKey& key) const;

private:
    std::unordered_map<PlaneKey, std::uint32_t, PlaneKeyHash> ids_;
};

/// Every basis vector of S is psi-orthogonal to every basis vector of W.
bool orthogonal(const SympSpace& sp, const Plane& s, const Plane& w);

/// Projection-calculus classification. Throws std::invalid_argument when
/// sp.r() > 0.
PairCase classify(const SympSpace& sp, const Plane& s, const Plane& w);

/// Classification straight from the defining conditions (ranks of S+W, the
/// radical of S+W, orthogonality, w o_S u). Slower; used to cross-check.
PairCase classify_by_definition(const SympSpace& sp, const Plane& s, const Plane& w);

CaseCensus case_census(const SympSpace& sp, const Plane& s, std::span<const Plane> planes);

struct CensusSummary {
    /// Census of the first base; `constant` records whether every base agreed.
    CaseCensus census{};
    std::size_t bases = 0;
    bool constant = true;
};

/// Census for every base id in `bases`, compared against the first.
CensusSummary census_over(const SympSpace& sp, std::span<const Plane> planes, std::span<const std::uint32_t> bases);

}  // namespace frames::planes
