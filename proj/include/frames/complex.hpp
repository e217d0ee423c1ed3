#pragma once

// The frame complex: clique complex of the orthogonality graph. Simplices are
// sorted id tuples; a k-simplex is a (k+1)-frame.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "frames/exact.hpp"
#include "frames/graph.hpp"

namespace frames::complex {

using graph::OrthoGraph;
using graph::VertexId;

inline constexpr std::uint64_t kDefaultMaxCells = 10'000'000;
inline constexpr std::uint64_t kExactCellLimit = 50'000;
inline constexpr std::uint64_t kDefaultPrimes[2] = {1'000'003, 1'000'033};

/// Thrown when an enumeration or rank computation would exceed its cell budget.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// All m-frames, stored flat in lexicographic order.
class FrameList {
public:
    FrameList() = default;
    explicit FrameList(int m) : m_(m) {}

    int m() const noexcept { return m_; }
    std::size_t size() const noexcept { return m_ == 0 ? 0 : ids_.size() / static_cast<std::size_t>(m_); }
    bool empty() const noexcept { return ids_.empty(); }
    std::span<const VertexId> operator[](std::size_t i) const noexcept {
        return {ids_.data() + i * static_cast<std::size_t>(m_), static_cast<std::size_t>(m_)};
    }
    void push_back(std::span<const VertexId> frame) { ids_.insert(ids_.end(), frame.begin(), frame.end()); }
    /// Position of a sorted frame, by binary search.
    std::optional<std::size_t> find(std::span<const VertexId> frame) const;

private:
    int m_ = 0;
    std::vector<VertexId> ids_;
};

/// Throws std::invalid_argument unless 1 <= m <= n, BudgetExceeded when the
/// list would exceed max_cells frames.
FrameList enumerate_frames(const OrthoGraph& g, int m, std::uint64_t max_cells = kDefaultMaxCells);

/// Extends an m-frame list to the (m+1)-frames; the output stays lexicographic.
FrameList extend_frames(const OrthoGraph& g, const FrameList& frames, std::uint64_t max_cells = kDefaultMaxCells);

/// Vertices adjacent to every member of the frame.
std::uint64_t extension_count(const OrthoGraph& g, std::span<const VertexId> frame);

struct FVector {
    std::vector<std::uint64_t> f;  // f[m-1] = number of m-frames

    std::uint64_t total() const noexcept {
        std::uint64_t t = 0;
        for (auto v : f) t += v;
        return t;
    }
};

/// f_1..f_top (top defaults to n). Throws BudgetExceeded past max_cells in total.
FVector f_vector(const OrthoGraph& g, int top = 0, std::uint64_t max_cells = kDefaultMaxCells);

/// -1 + f_1 - f_2 + ...
BigInt euler_characteristic(const FVector& fv);
BigInt euler_characteristic(const OrthoGraph& g, std::uint64_t max_cells = kDefaultMaxCells);

// ---------------------------------------------------------------------------
// Chain complex

/// Boundary from k-simplices to (k-1)-simplices, k >= 1. Column j holds the
/// k+1 faces of simplex j; face i drops position i and carries sign (-1)^i.
struct Boundary {
    int k = 0;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::uint32_t> row_index;  // (k+1) * cols entries
    std::vector<std::int8_t> sign;

    std::span<const std::uint32_t> column_rows(std::size_t j) const noexcept {
        return {row_index.data() + j * static_cast<std::size_t>(k + 1), static_cast<std::size_t>(k + 1)};
    }
    std::span<const std::int8_t> column_signs(std::size_t j) const noexcept {
        return {sign.data() + j * static_cast<std::size_t>(k + 1), static_cast<std::size_t>(k + 1)};
    }
};

struct ChainComplex {
    std::uint64_t p = 0;
    std::vector<FrameList> simplices;  // simplices[k]: k-simplices = (k+1)-frames
    std::vector<Boundary> boundaries;  // boundaries[k-1] = d_k, k = 1..max_dim

    int max_dim() const noexcept { return static_cast<int>(simplices.size()) - 1; }
    const Boundary& boundary(int k) const { return boundaries.at(static_cast<std::size_t>(k - 1)); }
};

/// Simplices up to dimension max_dim (at most n-1) and their boundaries.
/// Throws std::invalid_argument for a non-prime p or max_dim out of range.
ChainComplex boundary_matrices(const OrthoGraph& g, int max_dim, std::uint64_t p,
                               std::uint64_t max_cells = kDefaultMaxCells);

Boundary boundary_from(const FrameList& faces, const FrameList& cells);

/// d_{k-1} d_k = 0 mod p, by sparse product. Requires 2 <= k <= max_dim.
bool composes_to_zero(const ChainComplex& cc, int k);

/// Coordinate text format with a MatrixMarket header; 1-based indices, values +1/-1.
void write_matrix_market(std::ostream& os, const Boundary& b);

// ---------------------------------------------------------------------------
// Betti numbers

/// Ranks of d_1..d_top over GF(p), by reducing the transposed matrices.
std::vector<std::uint64_t> boundary_ranks_mod_p(const ChainComplex& cc, std::uint64_t p);
/// The same over the rationals; intended for small complexes.
std::vector<std::uint64_t> boundary_ranks_exact(const ChainComplex& cc);

struct PrimeBetti {
    std::uint64_t p = 0;
    std::vector<std::uint64_t> ranks;  // rank d_1..d_top
    std::vector<BigInt> betti;         // reduced, k = 0..top
    BigInt euler_residual;             // sum (-1)^k betti_k minus chi~ from the f-vector
};

struct BettiReport {
    int top_dim = 0;
    FVector f;
    BigInt euler_char;
    std::vector<PrimeBetti> per_prime;
    std::optional<std::vector<BigInt>> exact;
    /// All primes (and the exact computation, when present) agree.
    bool agree = true;

    const std::vector<BigInt>& betti() const { return per_prime.front().betti; }
};

struct BettiOptions {
    std::vector<std::uint64_t> primes{kDefaultPrimes[0], kDefaultPrimes[1]};
    std::uint64_t max_cells = kDefaultMaxCells;
    bool exact = false;
};

/// Reduced Betti numbers through dimension n-1. Throws BudgetExceeded when
/// the complex exceeds max_cells simplices (or kExactCellLimit in exact mode),
/// std::invalid_argument for an empty or non-prime list.
BettiReport betti(const OrthoGraph& g, const BettiOptions& opts = {});

}  // namespace frames::complex
