#include "frames/planes.hpp"

#include <algorithm>
#include <stdexcept>

#include "frames/parallel.hpp"

namespace frames::planes {

namespace {

Plane make_plane(const SympSpace& sp, const Vector& r0, const Vector& r1) {
    Plane pl;
    pl.rref = {r0, r1};
    const ff::Elem form = sp.psi(r0, r1);
    pl.sbasis = {r0, sp.scale(sp.field().inv(form), r1)};
    pl.key = {sp.encode(r0), sp.encode(r1)};
    return pl;
}

void require_nondegenerate_space(const SympSpace& sp) {
    if (sp.r() != 0)
        throw std::invalid_argument("pair classification requires a non-degenerate space (r = 0)");
}

// Number of independent vectors among {a, b}.
int pair_rank(const SympSpace& sp, const Vector& a, const Vector& b) {
    const bool za = a.is_zero();
    const bool zb = b.is_zero();
    if (za && zb) return 0;
    if (za || zb) return 1;
    const ff::Field& f = sp.field();
    int i = 0;
    while (a[i] == 0) ++i;
    const ff::Elem ratio = f.div(b[i], a[i]);
    for (int j = 0; j < sp.dim(); ++j)
        if (b[j] != f.mul(ratio, a[j])) return 2;
    return 1;
}

}  // namespace

symp::SubspaceBasis Plane::basis(const SympSpace& sp) const {
    return symp::SubspaceBasis::span(sp, {rref[0], rref[1]});
}

Plane canonical_plane(const SympSpace& sp, const Vector& v1, const Vector& v2) {
    const auto span = symp::SubspaceBasis::span(sp, {v1, v2});
    if (span.dim() != 2) throw std::invalid_argument("plane generators are linearly dependent");
    if (sp.psi(span.rows()[0], span.rows()[1]) == 0)
        throw std::invalid_argument("plane is degenerate: psi vanishes on it");
    return make_plane(sp, span.rows()[0], span.rows()[1]);
}

Plane plane_from_key(const SympSpace& sp, PlaneKey key) {
    return canonical_plane(sp, sp.decode(key.first), sp.decode(key.second));
}

std::vector<Plane> enumerate_planes(const SympSpace& sp) {
    const std::uint64_t count = sp.vector_count();
    std::vector<Vector> all;
    all.reserve(count);
    for (std::uint64_t c = 0; c < count; ++c) all.push_back(sp.decode(c));

    // Projective representatives w (leading coordinate 1), partners u with
    // psi(w, u) = 1; every plane arises this way.
    std::vector<PlaneKey> keys;
    for (const Vector& w : all) {
        int lead = 0;
        while (lead < sp.dim() && w[lead] == 0) ++lead;
        if (lead == sp.dim() || w[lead] != 1) continue;
        for (const Vector& u : all) {
            if (sp.psi(w, u) != 1) continue;
            const auto span = symp::SubspaceBasis::span(sp, {w, u});
            keys.push_back({sp.encode(span.rows()[0]), sp.encode(span.rows()[1])});
        }
        // Keep the working set bounded on larger spaces.
        if (keys.size() > (1u << 22)) {
            std::sort(keys.begin(), keys.end());
            keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
        }
    }
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());

    std::vector<Plane> planes;
    planes.reserve(keys.size());
    for (const PlaneKey& k : keys) {
        Plane pl = make_plane(sp, sp.decode(k.first), sp.decode(k.second));
        pl.id = static_cast<std::uint32_t>(planes.size());
        planes.push_back(std::move(pl));
    }
    return planes;
}

PlaneLookup::PlaneLookup(std::span<const Plane> planes) {
    ids_.reserve(planes.size());
    for (std::size_t i = 0; i < planes.size(); ++i)
        ids_.emplace(planes[i].key, static_cast<std::uint32_t>(i));
}

std::optional<std::uint32_t> PlaneLookup::find(const PlaneKey& key) const {
    auto it = ids_.find(key);
    if (it == ids_.end()) return std::nullopt;
    return it->second;
}

bool orthogonal(const SympSpace& sp, const Plane& s, const Plane& w) {
    for (const Vector& a : s.rref)
        for (const Vector& b : w.rref)
            if (sp.psi(a, b) != 0) return false;
    return true;
}

PairCase classify(const SympSpace& sp, const Plane& s, const Plane& w) {
    require_nondegenerate_space(sp);
    const ff::Field& f = sp.field();
    const Vector& x = s.sbasis.x;
    const Vector& y = s.sbasis.y;
    const Vector& wv = w.sbasis.x;
    const Vector& uv = w.sbasis.y;

    const ff::Elem wx = sp.psi(wv, y);
    const ff::Elem wy = f.neg(sp.psi(wv, x));
    const ff::Elem ux = sp.psi(uv, y);
    const ff::Elem uy = f.neg(sp.psi(uv, x));
    if (wx == 0 && wy == 0 && ux == 0 && uy == 0) return PairCase::orthogonal;

    Vector ws(sp.dim());
    Vector us(sp.dim());
    const ff::Elem nwx = f.neg(wx), nwy = f.neg(wy), nux = f.neg(ux), nuy = f.neg(uy);
    for (int i = 0; i < sp.dim(); ++i) {
        ws[i] = f.add(wv[i], f.add(f.mul(nwx, x[i]), f.mul(nwy, y[i])));
        us[i] = f.add(uv[i], f.add(f.mul(nux, x[i]), f.mul(nuy, y[i])));
    }
    switch (pair_rank(sp, ws, us)) {
        case 0: return PairCase::identical;
        case 1: return PairCase::meet_in_line;
        default: break;
    }
    if (sp.psi(ws, us) == 0) return PairCase::degenerate_sum;
    const ff::Elem c = f.sub(f.mul(wx, uy), f.mul(wy, ux));
    return c == 0 ? PairCase::circ_vanishes : PairCase::generic;
}

PairCase classify_by_definition(const SympSpace& sp, const Plane& s, const Plane& w) {
    require_nondegenerate_space(sp);
    const auto sum = symp::SubspaceBasis::span(sp, {s.rref[0], s.rref[1], w.rref[0], w.rref[1]});
    if (sum.dim() == 2) return PairCase::identical;
    if (sum.dim() == 3) return PairCase::meet_in_line;
    if (symp::radical_dim(sp, sum) > 0) return PairCase::degenerate_sum;
    if (orthogonal(sp, s, w)) return PairCase::orthogonal;
    return symp::circ(sp, s.sbasis, w.sbasis.x, w.sbasis.y) == 0 ? PairCase::circ_vanishes
                                                                  : PairCase::generic;
}

CaseCensus case_census(const SympSpace& sp, const Plane& s, std::span<const Plane> planes) {
    CaseCensus census{};
    for (const Plane& w : planes) ++census[case_slot(classify(sp, s, w))];
    return census;
}

CensusSummary census_over(const SympSpace& sp, std::span<const Plane> planes, std::span<const std::uint32_t> bases) {
    CensusSummary out;
    out.bases = bases.size();
    if (bases.empty()) return out;
    std::vector<CaseCensus> all(bases.size());
    parallel_chunks(bases.size(), [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) all[i] = case_census(sp, planes[bases[i]], planes);
    });
    out.census = all.front();
    for (const auto& c : all)
        if (c != out.census) out.constant = false;
    return out;
}

}  // namespace frames::planes
