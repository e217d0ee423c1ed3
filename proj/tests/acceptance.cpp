// Acceptance run: one PASS/FAIL/SKIP line per criterion, exit 1 on any FAIL.
// FRAMES_STRETCH=1 enables the n = 4, q = 2 homology computation.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "frames/complex.hpp"
#include "frames/graph.hpp"
#include "frames/oracle.hpp"
#include "frames/planes.hpp"
#include "frames/verify.hpp"

using namespace frames;
using graph::OrthoGraph;
using graph::VertexId;
using planes::PairCase;

namespace {

struct Outcome {
    bool ok = true;
    bool skipped = false;
    std::ostringstream note;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            if (ok) note << "failed: ";
            else note << "; ";
            note << what;
            ok = false;
        }
    }
};

int failures = 0;

void criterion(const std::string& id, const std::string& title, double limit_seconds,
               const std::function<void(Outcome&)>& body) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.skipped && secs > limit_seconds) {
        std::ostringstream m;
        m << "runtime " << secs << " s over the " << limit_seconds << " s limit";
        o.require(false, m.str());
    }
    const char* status = o.skipped ? "SKIP" : o.ok ? "PASS" : "FAIL";
    if (!o.skipped && !o.ok) ++failures;
    std::cout << status << "  " << id << "  " << title;
    std::cout.setf(std::ios::fixed);
    std::cout.precision(2);
    std::cout << "  (" << secs << " s)";
    const auto note = o.note.str();
    if (!note.empty()) std::cout << "  " << note;
    std::cout << std::endl;
}

const OrthoGraph& graph_for(int n, int q) {
    static std::map<std::pair<int, int>, OrthoGraph> cache;
    auto it = cache.find({n, q});
    if (it == cache.end()) it = cache.emplace(std::pair{n, q}, OrthoGraph::build(symp::SympSpace::create(q, n))).first;
    return it->second;
}

std::string pair_name(int n, int q) { return "(" + std::to_string(n) + "," + std::to_string(q) + ")"; }

// d_m = q^(2m-4) (q^(2m-2) - 1) / (q^2 - 1), in plain integers.
long long d_value(int m, long long q) {
    if (m < 2) return 0;
    long long a = 1, b = 1;
    for (int i = 0; i < 2 * m - 4; ++i) a *= q;
    for (int i = 0; i < 2 * m - 2; ++i) b *= q;
    return a * (b - 1) / (q * q - 1);
}

void census_check(Outcome& o, int n, int q, std::size_t random_bases) {
    const auto& g = graph_for(n, q);
    std::vector<std::uint32_t> bases;
    if (random_bases == 0) {
        for (std::uint32_t i = 0; i < g.size(); ++i) bases.push_back(i);
    } else {
        std::mt19937_64 rng(graph::kDefaultSeed);
        for (std::size_t i = 0; i < random_bases; ++i) bases.push_back(static_cast<std::uint32_t>(rng() % g.size()));
    }
    const auto s = planes::census_over(g.space(), g.vertices(), bases);
    const auto t = oracle::table1(n, q);
    const std::array<BigInt, 6> want{1, t.b, t.c, t.d, t.e1, t.e2};
    bool eq = s.constant;
    for (std::size_t i = 0; i < 6; ++i) eq = eq && BigInt(s.census[i]) == want[i];
    o.require(eq, "census " + pair_name(n, q));
}

void mu_check(Outcome& o, int n, int q) {
    const auto& g = graph_for(n, q);
    const auto policy = graph::SamplingPolicy::for_graph(g, 25, graph::kDefaultSeed);
    const auto emp = graph::empirical_mu(g, policy);
    const auto mu = oracle::mu_table(n, q);
    const std::string name = pair_name(n, q);
    o.require(emp.all_constant(), "class constancy " + name);
    for (std::size_t i = 0; i < 6; ++i) {
        const auto& row = emp.rows[i];
        o.require(row.realized == mu.realized[i], "realized rows " + name);
        if (!row.realized) continue;
        if (!policy.exhaustive) o.require(row.pairs >= 25, "fewer than 25 pairs in row " + std::to_string(i + 1) + " " + name);
        o.require(row.row_sum() == g.degree(), "row sum " + std::to_string(i + 1) + " " + name);
        for (std::size_t j = 0; j < 6; ++j)
            o.require(Rational(row.counts[j]) == mu.entries[i][j],
                      "mu[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "] " + name);
    }
}

void spectrum_check(Outcome& o, int n, int q) {
    const auto& g = graph_for(n, q);
    std::vector<long long> cand;
    for (const auto& e : oracle::eigenvalues(n, q)) cand.push_back(static_cast<long long>(e));
    const auto c = graph::spectrum_certificate(g, cand);
    const std::string name = pair_name(n, q);
    o.require(c.annihilation_verified, "annihilation " + name);
    o.require(c.multiplicities_integral && c.multiplicities_nonnegative, "integral multiplicities " + name);
    o.require(c.moments_ok, "moments " + name);
    if (!c.multiplicities.empty()) {
        BigInt m0 = 0, m1 = 0, m2 = 0;
        for (std::size_t i = 0; i < c.eigenvalues.size(); ++i) {
            m0 += c.multiplicities[i];
            m1 += c.multiplicities[i] * c.eigenvalues[i];
            m2 += c.multiplicities[i] * c.eigenvalues[i] * c.eigenvalues[i];
        }
        o.require(m0 == BigInt(g.size()) && m1 == 0 && m2 == BigInt(g.size()) * g.degree(), "moment sums " + name);
    }
    if (n == 2 && q == 2) o.require(c.minimal_polynomial == std::vector<BigInt>{-1, 0, 1}, "minimal polynomial X^2 - 1");
}

std::vector<BigInt> betti_of(Outcome& o, int n, int q) {
    const auto rep = complex::betti(graph_for(n, q));
    const std::string name = pair_name(n, q);
    o.require(rep.per_prime.size() == 2, "two primes " + name);
    for (const auto& pb : rep.per_prime) o.require(pb.p > 1000000, "primes above 10^6");
    o.require(rep.agree && rep.per_prime.front().ranks == rep.per_prime.back().ranks, "rank agreement " + name);
    const auto& b = rep.betti();
    o.require(b.back() == 0, "top Betti number vanishes " + name);
    return b;
}

}  // namespace

int main() {
    std::cout << "frames acceptance run" << std::endl;

    criterion("1", "census equals the closed form", 30, [](Outcome& o) {
        for (auto [n, q] : {std::pair{2, 2}, {2, 3}, {3, 2}, {3, 3}}) census_check(o, n, q, 0);
        census_check(o, 4, 2, 10);
        const auto& c = planes::case_census(graph_for(3, 2).space(), graph_for(3, 2).vertex(0), graph_for(3, 2).vertices());
        o.require(c == planes::CaseCensus{1, 45, 90, 20, 180, 0}, "(3,2) census 1/45/90/20/180/0");
    });

    criterion("2", "empirical mu equals the closed-form table", 300, [](Outcome& o) {
        for (auto [n, q] : {std::pair{2, 2}, {2, 3}, {3, 2}, {3, 3}, {4, 2}}) mu_check(o, n, q);
    });

    criterion("3", "spectrum certificates", 600, [](Outcome& o) {
        for (auto [n, q] : {std::pair{2, 2}, {2, 3}, {3, 2}, {3, 3}}) spectrum_check(o, n, q);
    });

    criterion("4", "components and diameters", 120, [](Outcome& o) {
        const auto c22 = graph::components_and_diameter(graph_for(2, 2));
        const auto c23 = graph::components_and_diameter(graph_for(2, 3));
        o.require(c22.count() == 10, "(2,2) has 10 components");
        o.require(c23.count() == 45, "(2,3) has 45 components");
        for (auto [n, q, diam] : {std::tuple{3, 2, 3}, {3, 3, 3}, {4, 2, 2}}) {
            const auto c = graph::components_and_diameter(graph_for(n, q));
            o.require(c.count() == 1 && c.diameters.front() == diam,
                      pair_name(n, q) + " connected with diameter " + std::to_string(diam));
        }
    });

    criterion("5", "f-vector and Euler characteristic", 300, [](Outcome& o) {
        for (auto [n, q, chi] : {std::tuple{3, 2, -1905LL}, {3, 3, -213760LL}}) {
            const auto fv = complex::f_vector(graph_for(n, q));
            for (int m = 1; m <= n; ++m)
                o.require(BigInt(fv.f[static_cast<std::size_t>(m) - 1]) == oracle::frame_count(n, q, m),
                          "f_" + std::to_string(m) + " " + pair_name(n, q));
            o.require(complex::euler_characteristic(fv) == chi, "chi " + pair_name(n, q));
            o.require(oracle::euler_char(n, q) == chi, "closed-form chi " + pair_name(n, q));
        }
        o.require(complex::f_vector(graph_for(3, 2)).f == std::vector<std::uint64_t>{336, 3360, 1120}, "(3,2) f-vector");
        o.require(complex::f_vector(graph_for(3, 3)).f == std::vector<std::uint64_t>{7371, 331695, 110565}, "(3,3) f-vector");
    });

    criterion("6", "reduced Betti numbers over two primes", 900, [](Outcome& o) {
        o.require(betti_of(o, 3, 2) == std::vector<BigInt>{0, 1905, 0}, "(3,2) betti 0/1905/0");
        o.require(betti_of(o, 2, 2).front() == 9, "(2,2) betti_0 = 9");
        o.require(betti_of(o, 3, 3)[1] == 213760, "(3,3) betti_1 = 213760");
    });

    criterion("6s", "stretch: n = 4, q = 2 has vanishing betti_1", 1800, [](Outcome& o) {
        const char* env = std::getenv("FRAMES_STRETCH");
        if (!env || std::string(env) != "1") {
            o.skipped = true;
            o.note << "set FRAMES_STRETCH=1 to run (about 8.5 million cells)";
            return;
        }
        const auto fv = complex::f_vector(graph_for(4, 2));
        o.require(fv.total() <= 10'000'000, "cell budget 10^7");
        const auto b = betti_of(o, 4, 2);
        o.require(b.size() == 4 && b[1] == 0, "betti_1 = 0");
        o.require(b.size() == 4 && b[0] == 0, "betti_0 = 0");
        o.note << "betti =";
        for (const auto& v : b) o.note << ' ' << v;
    });

    criterion("7", "Garland predicates", 1, [](Outcome& o) {
        o.require(oracle::lambda_min(3, 2) == Rational(3, 5), "lambda_min(3,2) = 3/5");
        o.require(oracle::p_value(3, 2) == Rational(9, 2), "P_3(2) = 9/2");
        for (int q = 2; q <= 9; ++q) {
            o.require(oracle::p_value(3, q) == Rational(q + 2) + Rational(1, q), "P_3 closed form");
            o.require(oracle::p_value(4, q) == Rational(q * q + 4) + Rational(1, q * q), "P_4 closed form");
            for (int j = 3; j <= 12; ++j)
                for (int i = j + 1; i <= 12; ++i)
                    o.require(oracle::p_value(i, q) - oracle::p_value(j, q) > i - j, "monotonicity");
            for (int n = 3; n <= 40; ++n) {
                const bool want = q == 2 ? n >= 7 : q == 3 ? (n >= 5 && n != 6) : n >= 5;
                o.require(oracle::garland_report(n, q).conn_half_n == want,
                          "half connectivity at q=" + std::to_string(q) + " n=" + std::to_string(n));
            }
        }
        long long first = 0;
        for (long long n = 1; first == 0; ++n)
            if (336 * n > 336 * 20 + n * (n - 2)) first = n;
        o.require(oracle::prop91_threshold(2) == first, "threshold(2) = " + std::to_string(first));
        for (int q : {2, 3})
            for (int n = 1; n <= 60; ++n)
                o.require(oracle::prop91_bound(n, q) == oracle::f_vector_inequality(n, q),
                          "bound and f-vector inequality at q=" + std::to_string(q) + " n=" + std::to_string(n));
    });

    criterion("8", "walk counts equal mu^r l_0", 60, [](Outcome& o) {
        const auto& g = graph_for(3, 2);
        for (int r = 0; r <= 4; ++r) {
            const auto want = verify::predicted_walks(3, 2, r);
            for (VertexId s = 0; s < g.size(); ++s) {
                const auto w = graph::walk_vector(g, s, r);
                bool ok = w.class_constant;
                for (std::size_t i = 0; i < 6; ++i)
                    if (w.realized[i]) ok = ok && Rational(w.counts[i]) == want[i];
                if (!ok) {
                    o.require(false, "r=" + std::to_string(r) + " source " + std::to_string(s));
                    return;
                }
            }
        }
        o.require(graph::walk_vector(g, 0, 2).counts[1] == 4, "case-2 entry of l_2 = 4");
    });

    criterion("9", "planes of degenerate spaces", 10, [](Outcome& o) {
        for (auto [n, r, q] : {std::tuple{1, 1, 2}, {1, 2, 2}, {2, 1, 2}, {1, 1, 3}}) {
            const auto count = planes::enumerate_planes(symp::SympSpace::create(q, n, r)).size();
            long long want = d_value(n + 1, q);
            for (int i = 0; i < 2 * r; ++i) want *= q;
            o.require(static_cast<long long>(count) == want,
                      "(n,r,q)=(" + std::to_string(n) + "," + std::to_string(r) + "," + std::to_string(q) + ") gives " +
                          std::to_string(count) + " not " + std::to_string(want));
        }
    });

    criterion("10", "degenerate-sum witnesses are unique and number 8", 120, [](Outcome& o) {
        const auto& g = graph_for(3, 2);
        const auto& sp = g.space();
        std::uint64_t pairs = 0, bad_unique = 0, bad_count = 0;
        for (VertexId s = 0; s < g.size(); ++s)
            for (VertexId w = 0; w < g.size(); ++w) {
                if (planes::classify(sp, g.vertex(s), g.vertex(w)) != PairCase::degenerate_sum) continue;
                ++pairs;
                std::uint64_t count = 0;
                const auto wb = g.vertex(w).basis(sp);
                for (VertexId t : g.neighbors(s)) {
                    const auto sum = symp::sum(sp, wb, g.vertex(t).basis(sp));
                    if (sum.dim() != 4) continue;
                    const bool degenerate = symp::radical_dim(sp, sum) != 0;
                    const auto found = graph::witness_pairs_exhaustive(sp, g.vertex(w), g.vertex(t));
                    if (found.size() != (degenerate ? 1u : 0u)) ++bad_unique;
                    if (degenerate) ++count;
                }
                if (count != 8) ++bad_count;
            }
        o.require(pairs == 336ull * 90, "336 * 90 pairs with W in E_3(S)");
        o.require(bad_unique == 0, std::to_string(bad_unique) + " sums without a unique witness");
        o.require(bad_count == 0, std::to_string(bad_count) + " pairs whose count differs from 8");
    });

    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
