#include "frames/complex.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

#include "frames/ff.hpp"
#include "frames/parallel.hpp"

namespace frames::complex {

std::optional<std::size_t> FrameList::find(std::span<const VertexId> frame) const {
    std::size_t lo = 0, hi = size();
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        const auto cur = (*this)[mid];
        const auto cmp = std::lexicographical_compare_three_way(cur.begin(), cur.end(), frame.begin(), frame.end());
        if (cmp == 0) return mid;
        if (cmp < 0)
            lo = mid + 1;
        else
            hi = mid;
    }
    return std::nullopt;
}

FrameList extend_frames(const OrthoGraph& g, const FrameList& frames, std::uint64_t max_cells) {
    FrameList out(frames.m() + 1);
    std::vector<VertexId> buf(static_cast<std::size_t>(frames.m()) + 1);
    std::uint64_t count = 0;
    for (std::size_t i = 0; i < frames.size(); ++i) {
        const auto sigma = frames[i];
        const VertexId last = sigma.back();
        std::copy(sigma.begin(), sigma.end(), buf.begin());
        for (VertexId t : g.neighbors(last)) {
            if (t <= last) continue;
            bool ok = true;
            for (std::size_t j = 0; j + 1 < sigma.size() && ok; ++j) ok = g.adjacent(sigma[j], t);
            if (!ok) continue;
            if (++count > max_cells)
                throw BudgetExceeded("more than " + std::to_string(max_cells) + " frames of size " +
                                     std::to_string(out.m()));
            buf.back() = t;
            out.push_back(buf);
        }
    }
    return out;
}

FrameList enumerate_frames(const OrthoGraph& g, int m, std::uint64_t max_cells) {
    const int n = g.space().n();
    if (m < 1 || m > n)
        throw std::invalid_argument("frame size m=" + std::to_string(m) + " outside 1.." + std::to_string(n));
    if (g.size() > max_cells) throw BudgetExceeded("more than " + std::to_string(max_cells) + " vertices");
    FrameList frames(1);
    for (std::size_t v = 0; v < g.size(); ++v) {
        const VertexId id = static_cast<VertexId>(v);
        frames.push_back(std::span<const VertexId>(&id, 1));
    }
    for (int k = 1; k < m; ++k) frames = extend_frames(g, frames, max_cells);
    return frames;
}

std::uint64_t extension_count(const OrthoGraph& g, std::span<const VertexId> frame) {
    std::uint64_t c = 0;
    for (VertexId t : g.neighbors(frame.front())) {
        bool ok = true;
        for (std::size_t j = 1; j < frame.size() && ok; ++j) ok = g.adjacent(frame[j], t);
        if (ok) ++c;
    }
    return c;
}

FVector f_vector(const OrthoGraph& g, int top, std::uint64_t max_cells) {
    const int n = g.space().n();
    if (top <= 0 || top > n) top = n;
    FVector fv;
    FrameList frames = enumerate_frames(g, 1, max_cells);
    std::uint64_t total = frames.size();
    fv.f.push_back(frames.size());
    for (int m = 2; m <= top; ++m) {
        frames = extend_frames(g, frames, max_cells - total);
        total += frames.size();
        fv.f.push_back(frames.size());
    }
    return fv;
}

BigInt euler_characteristic(const FVector& fv) {
    BigInt chi = -1;
    for (std::size_t i = 0; i < fv.f.size(); ++i) chi += (i % 2 == 0 ? 1 : -1) * BigInt(fv.f[i]);
    return chi;
}

BigInt euler_characteristic(const OrthoGraph& g, std::uint64_t max_cells) {
    return euler_characteristic(f_vector(g, 0, max_cells));
}

// ---------------------------------------------------------------------------

Boundary boundary_from(const FrameList& faces, const FrameList& cells) {
    Boundary b;
    b.k = cells.m() - 1;
    b.rows = faces.size();
    b.cols = cells.size();
    const std::size_t width = static_cast<std::size_t>(cells.m());
    b.row_index.resize(width * b.cols);
    b.sign.resize(width * b.cols);
    std::vector<VertexId> face(width - 1);
    for (std::size_t j = 0; j < b.cols; ++j) {
        const auto cell = cells[j];
        for (std::size_t i = 0; i < width; ++i) {
            std::size_t o = 0;
            for (std::size_t t = 0; t < width; ++t)
                if (t != i) face[o++] = cell[t];
            const auto row = faces.find(face);
            if (!row) throw std::logic_error("face missing from the frame list");
            b.row_index[j * width + i] = static_cast<std::uint32_t>(*row);
            b.sign[j * width + i] = i % 2 == 0 ? 1 : -1;
        }
    }
    return b;
}

ChainComplex boundary_matrices(const OrthoGraph& g, int max_dim, std::uint64_t p, std::uint64_t max_cells) {
    if (!ff::is_prime(static_cast<long long>(p)))
        throw std::invalid_argument("p=" + std::to_string(p) + " is not prime");
    const int n = g.space().n();
    if (max_dim < 0 || max_dim > n - 1)
        throw std::invalid_argument("max_dim must lie in 0.." + std::to_string(n - 1));
    ChainComplex cc;
    cc.p = p;
    cc.simplices.push_back(enumerate_frames(g, 1, max_cells));
    std::uint64_t total = cc.simplices.back().size();
    for (int k = 1; k <= max_dim; ++k) {
        cc.simplices.push_back(extend_frames(g, cc.simplices.back(), max_cells - total));
        total += cc.simplices.back().size();
        cc.boundaries.push_back(boundary_from(cc.simplices[static_cast<std::size_t>(k) - 1], cc.simplices.back()));
    }
    return cc;
}

bool composes_to_zero(const ChainComplex& cc, int k) {
    if (k < 2 || k > cc.max_dim()) throw std::invalid_argument("composes_to_zero needs 2 <= k <= max_dim");
    const Boundary& outer = cc.boundary(k - 1);
    const Boundary& inner = cc.boundary(k);
    const auto p = static_cast<long long>(cc.p);
    std::vector<std::pair<std::uint32_t, long long>> acc;
    for (std::size_t j = 0; j < inner.cols; ++j) {
        acc.clear();
        const auto rows = inner.column_rows(j);
        const auto signs = inner.column_signs(j);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const auto r2 = outer.column_rows(rows[i]);
            const auto s2 = outer.column_signs(rows[i]);
            for (std::size_t t = 0; t < r2.size(); ++t) acc.emplace_back(r2[t], signs[i] * s2[t]);
        }
        std::sort(acc.begin(), acc.end());
        for (std::size_t a = 0; a < acc.size();) {
            long long s = 0;
            std::size_t b = a;
            for (; b < acc.size() && acc[b].first == acc[a].first; ++b) s += acc[b].second;
            if (s % p != 0) return false;
            a = b;
        }
    }
    return true;
}

void write_matrix_market(std::ostream& os, const Boundary& b) {
    os << "%%MatrixMarket matrix coordinate integer general\n";
    os << b.rows << ' ' << b.cols << ' ' << b.row_index.size() << '\n';
    for (std::size_t j = 0; j < b.cols; ++j) {
        const auto rows = b.column_rows(j);
        const auto signs = b.column_signs(j);
        for (std::size_t i = 0; i < rows.size(); ++i)
            os << rows[i] + 1 << ' ' << j + 1 << ' ' << static_cast<int>(signs[i]) << '\n';
    }
}

// ---------------------------------------------------------------------------

namespace {

struct ModP {
    using value = std::uint64_t;
    std::uint64_t p;
    value from_sign(std::int8_t s) const { return s > 0 ? 1 : p - 1; }
    bool is_zero(value v) const { return v == 0; }
    value mul(value a, value b) const {
        return static_cast<value>(static_cast<unsigned __int128>(a) * b % p);
    }
    value inv(value a) const {
        value r = 1, e = p - 2;
        for (; e; e >>= 1, a = mul(a, a))
            if (e & 1) r = mul(r, a);
        return r;
    }
    value div(value a, value b) const { return mul(a, inv(b)); }
    value sub_mul(value a, value f, value b) const {
        const value t = mul(f, b);
        return a >= t ? a - t : a + (p - t);
    }
};

struct Exact {
    using value = Rational;
    value from_sign(std::int8_t s) const { return Rational(s); }
    bool is_zero(const value& v) const { return v == 0; }
    value div(const value& a, const value& b) const { return a / b; }
    value sub_mul(const value& a, const value& f, const value& b) const { return a - f * b; }
};

// Column-major sparse matrix with +-1 entries.
struct SignedColumns {
    std::size_t rows = 0;
    std::vector<std::size_t> offset{0};
    std::vector<std::uint32_t> row;
    std::vector<std::int8_t> sign;

    std::size_t cols() const noexcept { return offset.size() - 1; }
};

// Coboundary d_k^T: column i lists the k-simplices having face i.
SignedColumns transpose(const Boundary& b) {
    SignedColumns t;
    t.rows = b.cols;
    t.offset.assign(b.rows + 1, 0);
    for (auto r : b.row_index) ++t.offset[r + 1];
    std::partial_sum(t.offset.begin(), t.offset.end(), t.offset.begin());
    t.row.resize(b.row_index.size());
    t.sign.resize(b.row_index.size());
    std::vector<std::size_t> fill(t.offset.begin(), t.offset.end() - 1);
    const std::size_t per = static_cast<std::size_t>(b.k) + 1;
    for (std::size_t j = 0; j < b.cols; ++j)
        for (std::size_t i = 0; i < per; ++i) {
            const auto r = b.row_index[j * per + i];
            t.row[fill[r]] = static_cast<std::uint32_t>(j);
            t.sign[fill[r]++] = b.sign[j * per + i];
        }
    return t;
}

// Rank by column reduction (pivot = lowest row). Columns flagged in skip are
// omitted; pivot rows of the reduced columns are flagged in pivots.
template <class Ops>
std::uint64_t reduce_rank(const SignedColumns& m, const std::vector<char>& skip, std::vector<char>& pivots,
                          const Ops& ops) {
    using V = typename Ops::value;
    using Column = std::vector<std::pair<std::uint32_t, V>>;
    std::vector<std::int64_t> owner(m.rows, -1);
    std::vector<Column> reduced;
    pivots.assign(m.rows, 0);
    Column col, tmp;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        if (!skip.empty() && skip[j]) continue;
        col.clear();
        for (std::size_t e = m.offset[j]; e < m.offset[j + 1]; ++e) col.emplace_back(m.row[e], ops.from_sign(m.sign[e]));
        std::sort(col.begin(), col.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        while (!col.empty()) {
            const std::int64_t o = owner[col.back().first];
            if (o < 0) break;
            const Column& piv = reduced[static_cast<std::size_t>(o)];
            const V f = ops.div(col.back().second, piv.back().second);
            tmp.clear();
            std::size_t a = 0, c = 0;
            while (a < col.size() || c < piv.size()) {
                if (c == piv.size() || (a < col.size() && col[a].first < piv[c].first)) {
                    tmp.push_back(col[a++]);
                } else if (a == col.size() || piv[c].first < col[a].first) {
                    tmp.emplace_back(piv[c].first, ops.sub_mul(V{}, f, piv[c].second));
                    ++c;
                } else {
                    V v = ops.sub_mul(col[a].second, f, piv[c].second);
                    if (!ops.is_zero(v)) tmp.emplace_back(col[a].first, std::move(v));
                    ++a, ++c;
                }
            }
            col.swap(tmp);
        }
        if (col.empty()) continue;
        owner[col.back().first] = static_cast<std::int64_t>(reduced.size());
        pivots[col.back().first] = 1;
        reduced.push_back(col);
    }
    return reduced.size();
}

// The rank of an incidence matrix is #vertices - #components over any field.
// Edges are taken in decreasing order; by anti-transpose duality the merging
// edges are exactly the pivot rows of the reduced coboundary d_1^T.
std::uint64_t edge_boundary_rank(const Boundary& b, std::vector<char>& pivots) {
    std::vector<std::uint32_t> parent(b.rows);
    std::iota(parent.begin(), parent.end(), 0u);
    auto find = [&](std::uint32_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    pivots.assign(b.cols, 0);
    std::uint64_t rank = 0;
    for (std::size_t j = b.cols; j-- > 0;) {
        const auto rows = b.column_rows(j);
        const auto a = find(rows[0]), c = find(rows[1]);
        if (a != c) {
            parent[a] = c;
            pivots[j] = 1;
            ++rank;
        }
    }
    return rank;
}

// Reduces the coboundaries bottom-up: columns that are pivots of d_k^T are
// cleared from d_{k+1}^T. Cohomology leaves far fewer columns that reduce to zero.
template <class Ops>
std::vector<std::uint64_t> all_ranks(const ChainComplex& cc, const Ops& ops) {
    const int top = cc.max_dim();
    std::vector<std::uint64_t> ranks(static_cast<std::size_t>(std::max(top, 0)), 0);
    std::vector<char> cleared;
    for (int k = 1; k <= top; ++k) {
        const Boundary& b = cc.boundary(k);
        if (k == 1) {
            ranks[0] = edge_boundary_rank(b, cleared);
            continue;
        }
        std::vector<char> pivots;
        ranks[static_cast<std::size_t>(k) - 1] = reduce_rank(transpose(b), cleared, pivots, ops);
        cleared = std::move(pivots);
    }
    return ranks;
}

std::vector<BigInt> reduced_betti(const ChainComplex& cc, const std::vector<std::uint64_t>& ranks) {
    const int top = cc.max_dim();
    std::vector<BigInt> betti;
    for (int k = 0; k <= top; ++k) {
        const BigInt cells = cc.simplices[static_cast<std::size_t>(k)].size();
        const BigInt below = k == 0 ? BigInt(cells > 0 ? 1 : 0) : BigInt(ranks[static_cast<std::size_t>(k) - 1]);
        const BigInt above = k == top ? BigInt(0) : BigInt(ranks[static_cast<std::size_t>(k)]);
        betti.push_back(cells - below - above);
    }
    return betti;
}

}  // namespace

std::vector<std::uint64_t> boundary_ranks_mod_p(const ChainComplex& cc, std::uint64_t p) {
    if (!ff::is_prime(static_cast<long long>(p)))
        throw std::invalid_argument("p=" + std::to_string(p) + " is not prime");
    return all_ranks(cc, ModP{p});
}

std::vector<std::uint64_t> boundary_ranks_exact(const ChainComplex& cc) { return all_ranks(cc, Exact{}); }

BettiReport betti(const OrthoGraph& g, const BettiOptions& opts) {
    if (opts.primes.empty()) throw std::invalid_argument("at least one prime is required");
    for (auto p : opts.primes)
        if (!ff::is_prime(static_cast<long long>(p)))
            throw std::invalid_argument("p=" + std::to_string(p) + " is not prime");

    const int top = g.space().n() - 1;
    const std::uint64_t budget = opts.exact ? std::min(opts.max_cells, kExactCellLimit) : opts.max_cells;
    ChainComplex cc = boundary_matrices(g, top, opts.primes.front(), budget);

    BettiReport rep;
    rep.top_dim = top;
    for (const auto& s : cc.simplices) rep.f.f.push_back(s.size());
    rep.euler_char = euler_characteristic(rep.f);
    rep.per_prime.resize(opts.primes.size());
    parallel_chunks(opts.primes.size(), [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            PrimeBetti& pb = rep.per_prime[i];
            pb.p = opts.primes[i];
            pb.ranks = boundary_ranks_mod_p(cc, pb.p);
            pb.betti = reduced_betti(cc, pb.ranks);
            BigInt alt = 0;
            for (std::size_t k = 0; k < pb.betti.size(); ++k) alt += (k % 2 == 0 ? 1 : -1) * pb.betti[k];
            pb.euler_residual = alt - rep.euler_char;
        }
    });
    for (const auto& pb : rep.per_prime)
        if (pb.betti != rep.per_prime.front().betti) rep.agree = false;
    if (opts.exact) {
        rep.exact = reduced_betti(cc, boundary_ranks_exact(cc));
        if (*rep.exact != rep.per_prime.front().betti) rep.agree = false;
    }
    return rep;
}

}  // namespace frames::complex
