#include "frames/graph.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <stdexcept>

#include "frames/oracle.hpp"
#include "frames/parallel.hpp"

namespace frames::graph {

OrthoGraph OrthoGraph::build(const SympSpace& sp) {
    if (sp.r() != 0)
        throw std::invalid_argument("the orthogonality graph is built on non-degenerate spaces only (r = 0)");
    if (sp.n() < 2) throw std::invalid_argument("the orthogonality graph needs n >= 2");
    return OrthoGraph(sp, planes::enumerate_planes(sp));
}

OrthoGraph::OrthoGraph(SympSpace sp, std::vector<Plane> vertices)
    : space_(std::move(sp)), vertices_(std::move(vertices)) {
    const std::size_t n = vertices_.size();
    if (n > std::numeric_limits<VertexId>::max())
        throw std::length_error("too many vertices for 32-bit ids");

    std::vector<std::vector<VertexId>> lists(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (planes::orthogonal(space_, vertices_[i], vertices_[j])) {
                lists[i].push_back(static_cast<VertexId>(j));
                lists[j].push_back(static_cast<VertexId>(i));
            }

    offsets_.assign(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) offsets_[i + 1] = offsets_[i] + lists[i].size();
    nbrs_.reserve(offsets_[n]);
    for (auto& l : lists) {
        nbrs_.insert(nbrs_.end(), l.begin(), l.end());
        std::vector<VertexId>().swap(l);
    }

    degree_ = n == 0 ? 0 : offsets_[1];
    for (std::size_t i = 0; i < n; ++i)
        if (offsets_[i + 1] - offsets_[i] != degree_) regular_ = false;

    if (n <= (std::size_t{1} << 16)) {
        words_ = std::max<std::size_t>(1, (n + 63) / 64);
        bits_.assign(n * words_, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (VertexId j : neighbors(static_cast<VertexId>(i)))
                bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
    }
}

bool OrthoGraph::adjacent(VertexId a, VertexId b) const {
    if (has_bitsets()) return (bit_row(a)[b / 64] >> (b % 64)) & 1u;
    const auto nb = neighbors(a);
    return std::binary_search(nb.begin(), nb.end(), b);
}

// ---------------------------------------------------------------------------

namespace {

// Eccentricity of s inside its component, given the component's members.
// Direction-optimizing BFS on bitset rows: expand a small frontier top-down,
// otherwise let each unvisited vertex look for a neighbor in the frontier.
int eccentricity_bits(const OrthoGraph& g, VertexId s, const std::vector<VertexId>& members) {
    const std::size_t words = g.words_per_row();
    std::vector<std::uint64_t> visited(words, 0), frontier(words, 0), next(words, 0);
    std::vector<VertexId> frontier_list{s};
    std::vector<VertexId> unvisited;
    unvisited.reserve(members.size());
    for (VertexId v : members)
        if (v != s) unvisited.push_back(v);
    visited[s / 64] |= std::uint64_t{1} << (s % 64);
    frontier[s / 64] = visited[s / 64];

    int level = 0;
    while (!unvisited.empty()) {
        std::fill(next.begin(), next.end(), 0);
        if (frontier_list.size() <= unvisited.size() / 8) {
            for (VertexId v : frontier_list) {
                const auto row = g.bit_row(v);
                for (std::size_t w = 0; w < words; ++w) next[w] |= row[w];
            }
            for (std::size_t w = 0; w < words; ++w) next[w] &= ~visited[w];
        } else {
            for (VertexId v : unvisited) {
                const auto row = g.bit_row(v);
                for (std::size_t w = 0; w < words; ++w)
                    if (row[w] & frontier[w]) {
                        next[v / 64] |= std::uint64_t{1} << (v % 64);
                        break;
                    }
            }
        }
        frontier_list.clear();
        std::size_t keep = 0;
        for (VertexId v : unvisited) {
            if ((next[v / 64] >> (v % 64)) & 1u)
                frontier_list.push_back(v);
            else
                unvisited[keep++] = v;
        }
        if (frontier_list.empty()) break;
        unvisited.resize(keep);
        for (std::size_t w = 0; w < words; ++w) visited[w] |= next[w];
        frontier.swap(next);
        ++level;
    }
    return level;
}

int eccentricity_lists(const OrthoGraph& g, VertexId s, std::vector<int>& dist) {
    std::vector<VertexId> queue{s};
    dist[s] = 0;
    int ecc = 0;
    for (std::size_t h = 0; h < queue.size(); ++h) {
        const VertexId v = queue[h];
        for (VertexId t : g.neighbors(v))
            if (dist[t] < 0) {
                dist[t] = dist[v] + 1;
                ecc = std::max(ecc, dist[t]);
                queue.push_back(t);
            }
    }
    for (VertexId v : queue) dist[v] = -1;
    return ecc;
}

}  // namespace

ComponentReport components_and_diameter(const OrthoGraph& g) {
    const std::size_t n = g.size();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<VertexId>> members;
    for (std::size_t start = 0; start < n; ++start) {
        if (comp[start] >= 0) continue;
        const int c = static_cast<int>(members.size());
        members.emplace_back();
        auto& m = members.back();
        comp[start] = c;
        m.push_back(static_cast<VertexId>(start));
        for (std::size_t h = 0; h < m.size(); ++h)
            for (VertexId t : g.neighbors(m[h]))
                if (comp[t] < 0) {
                    comp[t] = c;
                    m.push_back(t);
                }
        std::sort(m.begin(), m.end());
    }

    ComponentReport rep;
    for (const auto& m : members) {
        std::vector<int> ecc(m.size(), 0);
        if (g.has_bitsets()) {
            parallel_chunks(m.size(), [&](std::size_t lo, std::size_t hi) {
                for (std::size_t i = lo; i < hi; ++i) ecc[i] = eccentricity_bits(g, m[i], m);
            });
        } else {
            parallel_chunks(m.size(), [&](std::size_t lo, std::size_t hi) {
                std::vector<int> dist(n, -1);
                for (std::size_t i = lo; i < hi; ++i) ecc[i] = eccentricity_lists(g, m[i], dist);
            });
        }
        rep.sizes.push_back(m.size());
        rep.diameters.push_back(*std::max_element(ecc.begin(), ecc.end()));
    }
    return rep;
}

// ---------------------------------------------------------------------------

std::vector<std::uint64_t> walk_counts(const OrthoGraph& g, VertexId source, int r) {
    if (r < 0) throw std::invalid_argument("walk length must be non-negative");
    if (g.degree() > 1) {
        unsigned __int128 bound = 1;
        for (int i = 0; i < r; ++i) {
            bound *= g.degree();
            if (bound > std::numeric_limits<std::uint64_t>::max())
                throw std::overflow_error("walk counts exceed 64 bits for this length");
        }
    }
    const std::size_t n = g.size();
    std::vector<std::uint64_t> cur(n, 0), next(n, 0);
    cur[source] = 1;
    for (int step = 0; step < r; ++step) {
        parallel_chunks(n, [&](std::size_t lo, std::size_t hi) {
            for (std::size_t v = lo; v < hi; ++v) {
                std::uint64_t s = 0;
                for (VertexId t : g.neighbors(static_cast<VertexId>(v))) s += cur[t];
                next[v] = s;
            }
        });
        cur.swap(next);
    }
    return cur;
}

WalkVector walk_vector(const OrthoGraph& g, VertexId source, int r) {
    const auto counts = walk_counts(g, source, r);
    const SympSpace& sp = g.space();
    const Plane& s = g.vertex(source);
    WalkVector wv;
    for (std::size_t w = 0; w < g.size(); ++w) {
        const std::size_t slot = planes::case_slot(planes::classify(sp, s, g.vertex(static_cast<VertexId>(w))));
        if (!wv.realized[slot]) {
            wv.realized[slot] = true;
            wv.counts[slot] = counts[w];
        } else if (wv.counts[slot] != counts[w]) {
            wv.class_constant = false;
        }
    }
    return wv;
}

// ---------------------------------------------------------------------------

std::array<std::uint64_t, 6> mu_counts(const OrthoGraph& g, VertexId s, VertexId w) {
    std::array<std::uint64_t, 6> out{};
    const Plane& wp = g.vertex(w);
    for (VertexId t : g.neighbors(s))
        ++out[planes::case_slot(planes::classify(g.space(), g.vertex(t), wp))];
    return out;
}

SamplingPolicy SamplingPolicy::for_graph(const OrthoGraph& g, std::size_t samples, std::uint64_t seed) {
    return {g.size() <= 1000, samples, seed};
}

namespace {

void record(MuRow& row, const std::array<std::uint64_t, 6>& counts) {
    if (!row.realized) {
        row.realized = true;
        row.counts = counts;
    } else if (row.counts != counts) {
        row.constant = false;
    }
    ++row.pairs;
}

}  // namespace

EmpiricalMu empirical_mu(const OrthoGraph& g, const SamplingPolicy& policy) {
    EmpiricalMu out;
    out.policy = policy;
    const std::size_t n = g.size();
    const SympSpace& sp = g.space();
    if (n == 0) return out;

    if (policy.exhaustive) {
        // Class of every ordered pair, then each mu row by lookup.
        std::vector<std::uint8_t> cls(n * n);
        parallel_chunks(n, [&](std::size_t lo, std::size_t hi) {
            for (std::size_t a = lo; a < hi; ++a)
                for (std::size_t b = 0; b < n; ++b)
                    cls[a * n + b] = static_cast<std::uint8_t>(
                        planes::case_slot(planes::classify(sp, g.vertex(a), g.vertex(b))));
        });
        for (std::size_t s = 0; s < n; ++s) {
            const auto nb = g.neighbors(static_cast<VertexId>(s));
            for (std::size_t w = 0; w < n; ++w) {
                std::array<std::uint64_t, 6> counts{};
                for (VertexId t : nb) ++counts[cls[static_cast<std::size_t>(t) * n + w]];
                record(out.rows[cls[s * n + w]], counts);
            }
        }
        return out;
    }

    // One random W per class for each of `samples_per_class` random S.
    std::mt19937_64 rng(policy.seed);
    std::uniform_int_distribution<std::size_t> pick_vertex(0, n - 1);
    for (std::size_t k = 0; k < policy.samples_per_class; ++k) {
        const auto s = static_cast<VertexId>(pick_vertex(rng));
        std::array<std::vector<VertexId>, 6> buckets;
        for (std::size_t w = 0; w < n; ++w)
            buckets[planes::case_slot(planes::classify(sp, g.vertex(s), g.vertex(static_cast<VertexId>(w))))]
                .push_back(static_cast<VertexId>(w));
        for (std::size_t i = 0; i < 6; ++i) {
            if (buckets[i].empty()) continue;
            std::uniform_int_distribution<std::size_t> pick(0, buckets[i].size() - 1);
            record(out.rows[i], mu_counts(g, s, buckets[i][pick(rng)]));
        }
    }
    return out;
}

Mu5Check mu5_check(const OrthoGraph& g, VertexId s, VertexId w) {
    const SympSpace& sp = g.space();
    const Plane& sv = g.vertex(s);
    const Plane& wv = g.vertex(w);
    Mu5Check out;
    out.empirical = mu_counts(g, s, w)[planes::case_slot(PairCase::circ_vanishes)];
    out.sum_dim = symp::rank(sp, {sv.rref[0], sv.rref[1], wv.rref[0], wv.rref[1]});
    const auto ws = symp::project(sp, wv.sbasis.x, sv.sbasis).rest;
    const auto us = symp::project(sp, wv.sbasis.y, sv.sbasis).rest;
    out.psi_ws_us_nonzero = sp.psi(ws, us) != 0;
    out.formula = oracle::mu5_formula(sp.n(), sp.q(), out.sum_dim, out.psi_ws_us_nonzero);
    return out;
}

// ---------------------------------------------------------------------------

namespace {

bool satisfies_witness(const SympSpace& sp, const Plane& w, const symp::SymplecticPair& p) {
    return sp.psi(p.x, p.y) == 1 && sp.psi(p.x, w.sbasis.x) == 1 && sp.psi(p.y, w.sbasis.y) == 1 &&
           sp.psi(p.x, w.sbasis.y) == 0 && sp.psi(p.y, w.sbasis.x) == 0;
}

}  // namespace

std::optional<symp::SymplecticPair> degenerate_sum_witness(const SympSpace& sp, const Plane& w,
                                                           const Plane& t) {
    const ff::Field& f = sp.field();
    const symp::Vector& x = t.sbasis.x;
    const symp::Vector& y = t.sbasis.y;
    const ff::Elem a = sp.psi(x, w.sbasis.x);
    const ff::Elem c = sp.psi(x, w.sbasis.y);
    const ff::Elem d = sp.psi(y, w.sbasis.x);
    const ff::Elem b = sp.psi(y, w.sbasis.y);
    // (x', y') = M^{-1} (x, y) with M = [[a, c], [d, b]]; Psi(x', y') = 1 / det M.
    if (f.sub(f.mul(a, b), f.mul(c, d)) != 1) return std::nullopt;
    symp::SymplecticPair p{sp.axpy(sp.scale(b, x), f.neg(c), y), sp.axpy(sp.scale(a, y), f.neg(d), x)};
    if (!satisfies_witness(sp, w, p)) throw std::logic_error("witness construction failed");
    return p;
}

std::vector<symp::SymplecticPair> witness_pairs_exhaustive(const SympSpace& sp, const Plane& w,
                                                           const Plane& t) {
    const ff::Field& f = sp.field();
    const auto elems = f.elements();
    std::vector<symp::SymplecticPair> found;
    for (ff::Elem al : elems)
        for (ff::Elem be : elems) {
            if (al == 0 && be == 0) continue;
            const auto xp = sp.axpy(sp.scale(al, t.sbasis.x), be, t.sbasis.y);
            for (ff::Elem ga : elems)
                for (ff::Elem de : elems) {
                    if (f.sub(f.mul(al, de), f.mul(be, ga)) != 1) continue;
                    symp::SymplecticPair p{xp, sp.axpy(sp.scale(ga, t.sbasis.x), de, t.sbasis.y)};
                    if (satisfies_witness(sp, w, p)) found.push_back(p);
                }
        }
    return found;
}

}  // namespace frames::graph
