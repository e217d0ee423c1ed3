#include <doctest.h>

#include <random>

#include "frames/symp.hpp"

using namespace frames;
using namespace frames::symp;

namespace {

Vector random_vector(const SympSpace& sp, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(0, sp.q() - 1);
    Vector v = sp.zero();
    for (int i = 0; i < sp.dim(); ++i) v[i] = static_cast<ff::Elem>(d(rng));
    return v;
}

SubspaceBasis span_of(const SympSpace& sp, std::initializer_list<Vector> rows) {
    return SubspaceBasis::span(sp, std::vector<Vector>(rows));
}

}  // namespace

TEST_CASE("psi on the standard basis") {
    for (int q : {2, 3, 4}) {
        const auto sp = SympSpace::create(q, 3);
        CHECK(sp.psi(sp.unit(0), sp.unit(3)) == 1);
        CHECK(sp.psi(sp.unit(3), sp.unit(0)) == sp.field().neg(1));
        CHECK(sp.psi(sp.unit(0), sp.unit(1)) == 0);
        CHECK(sp.psi(sp.unit(0), sp.unit(4)) == 0);
    }
}

TEST_CASE("psi is alternating and antisymmetric on random vectors") {
    std::mt19937_64 rng(7);
    for (int q : {2, 3, 5, 9}) {
        const auto sp = SympSpace::create(q, 3, 1);
        for (int t = 0; t < 200; ++t) {
            const Vector u = random_vector(sp, rng), v = random_vector(sp, rng);
            CHECK(sp.psi(v, v) == 0);
            CHECK(sp.field().add(sp.psi(u, v), sp.psi(v, u)) == 0);
        }
    }
}

TEST_CASE("encode and decode are inverse") {
    const auto sp = SympSpace::create(3, 2, 1);
    CHECK(sp.vector_count() == 243);
    for (std::uint64_t c = 0; c < sp.vector_count(); ++c) CHECK(sp.encode(sp.decode(c)) == c);
    CHECK(sp.to_digits(sp.unit(0)) == "10000");
    CHECK(SympSpace::create(11, 1).to_digits(SympSpace::create(11, 1).unit(1)) == "0.1");
}

TEST_CASE("orthogonal complements") {
    const auto sp = SympSpace::create(2, 2);
    CHECK(orth_complement(sp, sp.whole()).dim() == 0);
    const auto line = span_of(sp, {sp.unit(0)});
    const auto perp = orth_complement(sp, line);
    CHECK(perp.dim() == 3);
    CHECK(perp.contains(sp, sp.unit(0)));
}

TEST_CASE("dim S + dim S^perp = dim V + dim(S cap Rad V)") {
    std::mt19937_64 rng(11);
    for (int r : {0, 1, 2}) {
        const auto sp = SympSpace::create(2, 3 - (r > 0 ? 1 : 0), r);
        for (int t = 0; t < 100; ++t) {
            std::vector<Vector> rows{random_vector(sp, rng), random_vector(sp, rng)};
            const auto s = SubspaceBasis::span(sp, rows);
            const auto perp = orth_complement(sp, s);
            CHECK(s.dim() + perp.dim() == sp.dim() + intersection_dim(sp, s, sp.radical()));
        }
    }
}

TEST_CASE("double complement is S + Rad V") {
    std::mt19937_64 rng(13);
    for (int r : {0, 1, 2}) {
        const auto sp = SympSpace::create(3, 2, r);
        for (int t = 0; t < 60; ++t) {
            std::vector<Vector> rows;
            const int k = 1 + static_cast<int>(rng() % 3);
            for (int i = 0; i < k; ++i) rows.push_back(random_vector(sp, rng));
            const auto s = SubspaceBasis::span(sp, rows);
            CHECK(orth_complement(sp, orth_complement(sp, s)) == sum(sp, s, sp.radical()));
        }
    }
}

TEST_CASE("radical dimensions and non-degeneracy") {
    const auto sp = SympSpace::create(2, 3);
    const auto hyperbolic = span_of(sp, {sp.unit(0), sp.unit(3)});
    CHECK(radical_dim(sp, hyperbolic) == 0);
    CHECK(is_nondegenerate(sp, hyperbolic));
    const auto isotropic = span_of(sp, {sp.unit(0), sp.unit(1)});
    CHECK(radical_dim(sp, isotropic) == 2);
    CHECK_FALSE(is_nondegenerate(sp, isotropic));
    CHECK(radical_dim(sp, span_of(sp, {sp.unit(0), sp.unit(1), sp.unit(3)})) == 1);
    CHECK(is_nondegenerate(sp, span_of(sp, {sp.add(sp.unit(0), sp.unit(1)), sp.unit(3)})));
    const auto deg = SympSpace::create(2, 1, 1);
    CHECK_FALSE(is_nondegenerate(deg, deg.whole()));
    CHECK(radical_dim(deg, deg.whole()) == 1);
}

TEST_CASE("projection onto a hyperbolic pair") {
    const auto sp = SympSpace::create(3, 2);
    const SymplecticPair s{sp.unit(0), sp.unit(2)};
    const Vector w = sp.unit(1);  // in S^perp
    auto p = project(sp, w, s);
    CHECK(p.vx == 0);
    CHECK(p.vy == 0);
    CHECK(p.rest == w);
    p = project(sp, s.x, s);
    CHECK(p.vx == 1);
    CHECK(p.vy == 0);
    CHECK(p.rest.is_zero());
    p = project(sp, sp.add(sp.add(s.x, s.y), w), s);
    CHECK(p.vx == 1);
    CHECK(p.vy == 1);
    CHECK(p.rest == w);
    CHECK_THROWS_AS(project(sp, w, SymplecticPair{sp.unit(0), sp.unit(1)}), std::invalid_argument);
}

TEST_CASE("circ examples") {
    const auto sp = SympSpace::create(2, 2);
    const SymplecticPair s{sp.unit(0), sp.unit(2)};
    CHECK(circ(sp, s, sp.unit(1), sp.unit(3)) == 0);
    CHECK(circ(sp, s, s.x, s.y) == 1);
    // W = <e1 + e2, e3> meets S in a line; psi(w,u) = 1.
    const Vector w = sp.add(sp.unit(0), sp.unit(1)), u = sp.unit(2);
    CHECK(sp.psi(w, u) == 1);
    CHECK(circ(sp, s, w, u) == 1);
}

TEST_CASE("v_S and circ do not depend on the symplectic basis of S") {
    std::mt19937_64 rng(17);
    for (int q : {2, 3, 4}) {
        const auto sp = SympSpace::create(q, 2);
        const auto& f = sp.field();
        for (int t = 0; t < 100; ++t) {
            Vector x = random_vector(sp, rng), y = random_vector(sp, rng);
            const auto c = sp.psi(x, y);
            if (c == 0) continue;
            y = sp.scale(f.inv(c), y);
            // Another basis of the same plane: (a x + b y, c x + d y) with ad - bc = 1.
            const ff::Elem a = static_cast<ff::Elem>(1 + rng() % (q - 1)), b = static_cast<ff::Elem>(rng() % q);
            const ff::Elem d = f.inv(a);
            const SymplecticPair s1{x, y};
            const SymplecticPair s2{sp.axpy(sp.scale(a, x), b, y), sp.scale(d, y)};
            REQUIRE(sp.psi(s2.x, s2.y) == 1);
            const Vector v = random_vector(sp, rng), w = random_vector(sp, rng);
            CHECK(project(sp, v, s1).rest == project(sp, v, s2).rest);
            CHECK(circ(sp, s1, v, w) == circ(sp, s2, v, w));
        }
    }
}

TEST_CASE("1 - psi(w_S, u_S) = circ whenever psi(w, u) = 1, exhaustively for n = 2") {
    for (int q : {2, 3}) {
        const auto sp = SympSpace::create(q, 2);
        const auto& f = sp.field();
        const SymplecticPair s{sp.unit(0), sp.unit(2)};
        std::uint64_t checked = 0;
        bool ok = true;
        for (std::uint64_t a = 0; a < sp.vector_count(); ++a)
            for (std::uint64_t b = 0; b < sp.vector_count(); ++b) {
                const Vector w = sp.decode(a), u = sp.decode(b);
                if (sp.psi(w, u) != 1) continue;
                ++checked;
                const auto ws = project(sp, w, s).rest, us = project(sp, u, s).rest;
                ok = ok && f.sub(1, sp.psi(ws, us)) == circ(sp, s, w, u);
            }
        CHECK(ok);
        CHECK(checked > 0);
    }
}

TEST_CASE("invalid spaces are rejected") {
    CHECK_THROWS_AS(SympSpace::create(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(SympSpace::create(2, 1, -1), std::invalid_argument);
    CHECK_THROWS_AS(SympSpace::create(2, 9), std::invalid_argument);
}
