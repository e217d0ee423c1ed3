#include "frames/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <memory>
#include <numeric>
#include <optional>
#include <random>

#include "frames/oracle.hpp"
#include "frames/planes.hpp"

namespace frames::verify {

using report::Json;

std::string_view to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::skipped: return "skipped";
    }
    return "fail";
}

bool VerifyReport::failed() const {
    return std::any_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == Status::fail; });
}

bool VerifyReport::skipped_any() const {
    return std::any_of(checks.begin(), checks.end(),
                       [](const Check& c) { return c.status == Status::skipped && c.over_budget; });
}

int VerifyReport::exit_code(bool strict) const { return failed() || (strict && skipped_any()) ? 1 : 0; }

Json VerifyReport::to_json(bool timings) const {
    Json list = Json::array();
    for (const Check& c : checks) {
        Json j{{"name", c.name}, {"status", to_string(c.status)}, {"expected", c.expected}, {"observed", c.observed}};
        if (!c.reason.empty()) j["reason"] = c.reason;
        if (timings) j["seconds"] = c.seconds;
        list.push_back(std::move(j));
    }
    return Json{{"q", options.q},
                {"n", options.n},
                {"r", options.r},
                {"seed", options.seed},
                {"checks", std::move(list)},
                {"status", failed() ? "fail" : "pass"}};
}

report::Table VerifyReport::to_table(bool timings) const {
    report::Table t{{"name", "status", "expected", "observed", "reason"}, {}};
    if (timings) t.header.push_back("seconds");
    for (const Check& c : checks) {
        std::vector<std::string> row{c.name, std::string(to_string(c.status)), c.expected.dump(), c.observed.dump(),
                                     c.reason};
        if (timings) row.push_back(std::to_string(c.seconds));
        t.rows.push_back(std::move(row));
    }
    return t;
}

int garland_vanishing_degree(int n, int q) {
    const auto g = oracle::garland_report(n, q);
    int k = -1;
    if (g.cm_char0) k = std::max(k, n - 3);
    if (g.conn_n_minus_4) k = std::max(k, n - 4);
    if (g.conn_half_n) k = std::max(k, n / 2);
    return k;
}

std::array<Rational, 6> predicted_walks(int n, int q, int r) {
    const auto mu = oracle::mu_table(n, q);
    std::array<Rational, 6> l{1, 0, 0, 0, 0, 0};
    for (int step = 0; step < r; ++step) {
        std::array<Rational, 6> next;
        for (int i = 0; i < 6; ++i) {
            next[i] = 0;
            for (int j = 0; j < 6; ++j) next[i] += mu.entries[i][j] * l[j];
        }
        l = next;
    }
    return l;
}

namespace {

Json census_json(const planes::CaseCensus& c) {
    Json j = Json::array();
    for (auto v : c) j.push_back(v);
    return j;
}

Json big_list(const std::vector<BigInt>& v) {
    Json j = Json::array();
    for (const auto& x : v) j.push_back(report::integer(x));
    return j;
}

// Deterministic base sample: every id when small, otherwise `count` seeded draws.
std::vector<std::uint32_t> pick_bases(std::size_t n, std::size_t count, std::uint64_t seed, std::size_t limit) {
    std::vector<std::uint32_t> ids;
    if (n <= limit) {
        ids.resize(n);
        std::iota(ids.begin(), ids.end(), 0u);
        return ids;
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t i = 0; i < count; ++i) ids.push_back(static_cast<std::uint32_t>(pick(rng)));
    return ids;
}

class Runner {
public:
    explicit Runner(const VerifyOptions& o) : opts_(o) { rep_.options = o; }

    VerifyReport run();

private:
    using Body = std::function<void(Check&)>;

    void add(std::string name, const Body& body) {
        Check c;
        c.name = std::move(name);
        const auto t0 = std::chrono::steady_clock::now();
        try {
            body(c);
        } catch (const complex::BudgetExceeded& e) {
            c.status = Status::skipped;
            c.reason = e.what();
            c.over_budget = true;
        } catch (const std::exception& e) {
            c.status = Status::fail;
            c.reason = e.what();
        }
        c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        rep_.checks.push_back(std::move(c));
    }

    static void expect(Check& c, bool ok, const char* why) {
        if (!ok) {
            c.status = Status::fail;
            if (c.reason.empty()) c.reason = why;
        }
    }

    const graph::OrthoGraph& g() {
        if (!graph_) graph_ = std::make_unique<graph::OrthoGraph>(graph::OrthoGraph::build(symp::SympSpace::create(opts_.q, opts_.n)));
        return *graph_;
    }

    void plane_count();
    void census();
    void classify_checks();
    void graph_checks();
    void mu_checks();
    void walks();
    void witness();
    void spectrum();
    void complex_checks();
    void garland();

    VerifyOptions opts_;
    VerifyReport rep_;
    std::unique_ptr<graph::OrthoGraph> graph_;
};

void Runner::plane_count() {
    add("plane_count", [&](Check& c) {
        const auto sp = symp::SympSpace::create(opts_.q, opts_.n, opts_.r);
        const BigInt expected = oracle::plane_count(opts_.n, opts_.q, opts_.r);
        const auto planes = planes::enumerate_planes(sp);
        c.expected = report::integer(expected);
        c.observed = planes.size();
        expect(c, BigInt(planes.size()) == expected, "plane count differs from the closed form");
    });
}

void Runner::census() {
    add("census", [&](Check& c) {
        const auto& gr = g();
        const auto t = oracle::table1(opts_.n, opts_.q);
        const std::vector<BigInt> expected{1, t.b, t.c, t.d, t.e1, t.e2};
        const auto bases = pick_bases(gr.size(), opts_.census_bases, opts_.seed, 1000);
        const auto s = planes::census_over(gr.space(), gr.vertices(), bases);
        c.expected = big_list(expected);
        c.observed = {{"census", census_json(s.census)}, {"bases", s.bases}, {"constant", s.constant}};
        bool same = true;
        for (std::size_t i = 0; i < 6; ++i) same = same && BigInt(s.census[i]) == expected[i];
        expect(c, s.constant, "census depends on the base plane");
        expect(c, same, "census differs from the closed form");
    });
}

void Runner::classify_checks() {
    // Exhaustive on small graphs, a seeded pair sample otherwise.
    const auto& gr = g();
    const std::size_t n = gr.size();
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    if (n <= 400) {
        for (std::uint32_t a = 0; a < n; ++a)
            for (std::uint32_t b = 0; b < n; ++b) pairs.emplace_back(a, b);
    } else {
        std::mt19937_64 rng(opts_.seed);
        std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(n - 1));
        for (int i = 0; i < 20000; ++i) pairs.emplace_back(pick(rng), pick(rng));
    }
    add("classify_definition", [&](Check& c) {
        std::uint64_t bad = 0;
        for (auto [a, b] : pairs)
            if (planes::classify(gr.space(), gr.vertex(a), gr.vertex(b)) !=
                planes::classify_by_definition(gr.space(), gr.vertex(a), gr.vertex(b)))
                ++bad;
        c.expected = {{"disagreements", 0}};
        c.observed = {{"disagreements", bad}, {"pairs", pairs.size()}};
        expect(c, bad == 0, "fast and definitional classification disagree");
    });
    add("classify_symmetry", [&](Check& c) {
        std::uint64_t bad = 0;
        for (auto [a, b] : pairs)
            if (planes::classify(gr.space(), gr.vertex(a), gr.vertex(b)) !=
                planes::classify(gr.space(), gr.vertex(b), gr.vertex(a)))
                ++bad;
        c.expected = {{"asymmetric", 0}};
        c.observed = {{"asymmetric", bad}, {"pairs", pairs.size()}};
        expect(c, bad == 0, "classification is not symmetric");
    });
}

void Runner::graph_checks() {
    add("graph_degree", [&](Check& c) {
        const auto& gr = g();
        const BigInt d = *as_integer(oracle::d_n(opts_.n, opts_.q));
        const BigInt edges = d * gr.size() / 2;
        c.expected = {{"degree", report::integer(d)}, {"edges", report::integer(edges)}, {"regular", true}};
        c.observed = {{"degree", gr.degree()}, {"edges", gr.edge_count()}, {"regular", gr.is_regular()}};
        expect(c, gr.is_regular() && BigInt(gr.degree()) == d && BigInt(gr.edge_count()) == edges,
               "degree or edge count differs");
    });
    add("connectivity", [&](Check& c) {
        const auto cr = graph::components_and_diameter(g());
        const int q = opts_.q;
        const std::size_t comps = opts_.n == 2 ? static_cast<std::size_t>(q * q * (q * q + 1) / 2) : 1;
        const int diameter = opts_.n == 2 ? 1 : opts_.n == 3 ? 3 : 2;
        const int observed = *std::max_element(cr.diameters.begin(), cr.diameters.end());
        c.expected = {{"components", comps}, {"diameter", diameter}};
        c.observed = {{"components", cr.count()}, {"diameter", observed}};
        expect(c, cr.count() == comps && observed == diameter, "component count or diameter differs");
    });
}

void Runner::mu_checks() {
    add("mu_table", [&](Check& c) {
        const auto& gr = g();
        const auto policy = graph::SamplingPolicy::for_graph(gr, opts_.samples, opts_.seed);
        const auto emp = graph::empirical_mu(gr, policy);
        const auto mu = oracle::mu_table(opts_.n, opts_.q);
        const BigInt d = *as_integer(oracle::d_n(opts_.n, opts_.q));
        Json exp = Json::array(), obs = Json::array();
        bool rows_ok = true, sums_ok = true;
        for (std::size_t i = 0; i < 6; ++i) {
            const auto& row = emp.rows[i];
            if (mu.realized[i]) {
                Json e = Json::array();
                for (const auto& v : mu.entries[i]) e.push_back(report::exact(v));
                exp.push_back(e);
            } else {
                exp.push_back(nullptr);
            }
            if (row.realized) {
                obs.push_back(census_json(row.counts));
                for (std::size_t j = 0; j < 6; ++j) rows_ok = rows_ok && Rational(row.counts[j]) == mu.entries[i][j];
                sums_ok = sums_ok && BigInt(row.row_sum()) == d;
            } else {
                obs.push_back(nullptr);
            }
            rows_ok = rows_ok && row.realized == mu.realized[i];
        }
        c.expected = exp;
        c.observed = {{"rows", obs},
                      {"constant", emp.all_constant()},
                      {"exhaustive", policy.exhaustive},
                      {"samples_per_class", policy.samples_per_class}};
        expect(c, emp.all_constant(), "mu counts vary within a class");
        expect(c, sums_ok, "a realized row does not sum to d_n");
        expect(c, rows_ok, "mu differs from the closed form");
    });
    add("mu5", [&](Check& c) {
        const auto& gr = g();
        Json obs = Json::array();
        bool ok = true;
        for (std::uint32_t w = 0; w < gr.size(); ++w) {
            const auto cls = planes::classify(gr.space(), gr.vertex(0), gr.vertex(w));
            const auto m = graph::mu5_check(gr, 0, w);
            ok = ok && m.agree();
            if (obs.size() < 6 && std::none_of(obs.begin(), obs.end(), [&](const Json& j) {
                    return j["case"] == planes::case_number(cls);
                }))
                obs.push_back({{"case", planes::case_number(cls)},
                               {"empirical", m.empirical},
                               {"formula", report::exact(m.formula)}});
        }
        c.expected = {{"agree", true}};
        c.observed = {{"agree", ok}, {"representatives", obs}};
        expect(c, ok, "mu_5 differs from its closed form");
    });
}

void Runner::walks() {
    add("walks", [&](Check& c) {
        const auto& gr = g();
        Json obs = Json::array(), exp = Json::array();
        bool ok = true;
        for (int r = 0; r <= 4; ++r) {
            const auto wv = graph::walk_vector(gr, 0, r);
            const auto pred = predicted_walks(opts_.n, opts_.q, r);
            Json e = Json::array(), o = Json::array();
            for (std::size_t i = 0; i < 6; ++i) {
                e.push_back(wv.realized[i] ? report::exact(pred[i]) : Json(nullptr));
                o.push_back(wv.realized[i] ? Json(wv.counts[i]) : Json(nullptr));
                if (wv.realized[i]) ok = ok && Rational(wv.counts[i]) == pred[i];
            }
            ok = ok && wv.class_constant;
            exp.push_back(e);
            obs.push_back(o);
        }
        const auto l2 = oracle::l2_vector(opts_.n, opts_.q);
        const auto w2 = graph::walk_vector(gr, 0, 2);
        for (std::size_t i = 0; i < 6; ++i)
            if (w2.realized[i]) ok = ok && Rational(w2.counts[i]) == l2[i];
        c.expected = exp;
        c.observed = obs;
        expect(c, ok, "walk counts differ from mu^r l_0");
    });
}

void Runner::witness() {
    add("witness", [&](Check& c) {
        const auto& gr = g();
        const auto& sp = gr.space();
        const auto mu = oracle::mu_table(opts_.n, opts_.q);
        if (!mu.realized[2]) {
            c.status = Status::skipped;
            c.reason = "no pair of case 3 exists for n = 2";
            return;
        }
        const BigInt expected = *as_integer(mu.entries[2][2]);
        const auto bases = pick_bases(gr.size(), 1, opts_.seed, 1000);
        std::uint64_t pairs = 0, witnessed = 0, mismatched = 0, not_unique = 0;
        std::optional<std::uint64_t> count_seen;
        bool count_constant = true;
        for (auto s : bases) {
            for (std::uint32_t w = 0; w < gr.size(); ++w) {
                if (planes::classify(sp, gr.vertex(s), gr.vertex(w)) != planes::PairCase::degenerate_sum) continue;
                ++pairs;
                std::uint64_t count = 0;
                for (auto t : gr.neighbors(s)) {
                    const auto& W = gr.vertex(w);
                    const auto& T = gr.vertex(t);
                    const auto sum = symp::SubspaceBasis::span(sp, {W.rref[0], W.rref[1], T.rref[0], T.rref[1]});
                    if (sum.dim() != 4) continue;
                    const bool degenerate = symp::radical_dim(sp, sum) > 0;
                    const auto wit = graph::degenerate_sum_witness(sp, W, T);
                    if (wit.has_value() != degenerate) ++mismatched;
                    if (!wit) continue;
                    ++count;
                    ++witnessed;
                    const auto all = graph::witness_pairs_exhaustive(sp, W, T);
                    if (all.size() != 1 || !(all[0].x == wit->x && all[0].y == wit->y)) ++not_unique;
                }
                if (!count_seen) count_seen = count;
                if (*count_seen != count) count_constant = false;
            }
        }
        c.expected = {{"per_pair", report::integer(expected)}, {"mismatched", 0}, {"not_unique", 0}};
        c.observed = {{"per_pair", count_seen ? Json(*count_seen) : Json(nullptr)},
                      {"constant", count_constant},
                      {"pairs", pairs},
                      {"witnessed", witnessed},
                      {"mismatched", mismatched},
                      {"not_unique", not_unique}};
        expect(c, mismatched == 0, "witness existence differs from degeneracy of W+T");
        expect(c, not_unique == 0, "witness pair is not unique");
        expect(c, count_constant && count_seen && BigInt(*count_seen) == expected,
               "witness count differs from mu_3");
    });
}

void Runner::spectrum() {
    add("spectrum", [&](Check& c) {
        const auto& gr = g();
        std::vector<long long> ev;
        for (const auto& e : oracle::eigenvalues(opts_.n, opts_.q)) ev.push_back(static_cast<long long>(e));
        const double work = static_cast<double>(gr.size()) * static_cast<double>(gr.size()) *
                            static_cast<double>(gr.degree()) * static_cast<double>(ev.size());
        if (work > static_cast<double>(opts_.max_cells) * 2e4)
            throw complex::BudgetExceeded("spectrum certificate exceeds the work budget");
        const auto cert = graph::spectrum_certificate(gr, ev);
        const Rational lmin = opts_.n >= 3 ? oracle::lambda_min(opts_.n, opts_.q) : Rational(0);
        Json evj = Json::array();
        for (long long e : ev) evj.push_back(e);
        c.expected = {{"eigenvalues", evj}, {"lambda_min", report::rational(lmin)}};
        if (opts_.n == 2) c.expected["minimal_polynomial"] = {-1, 0, 1};
        c.observed = {{"eigenvalues", evj},
                      {"multiplicities", big_list(cert.multiplicities)},
                      {"annihilation_verified", cert.annihilation_verified},
                      {"multiplicities_integral", cert.multiplicities_integral},
                      {"multiplicities_nonnegative", cert.multiplicities_nonnegative},
                      {"moments_ok", cert.moments_ok},
                      {"minimal_polynomial", big_list(cert.minimal_polynomial)},
                      {"lambda_min", report::rational(cert.lambda_min_normalized)},
                      {"arithmetic", cert.arithmetic}};
        if (!cert.failures.empty()) c.reason = cert.failures.front();
        expect(c, cert.passed(), "certificate failed");
        expect(c, cert.lambda_min_normalized == lmin, "normalized gap differs");
        if (opts_.n == 2)
            expect(c, cert.minimal_polynomial == std::vector<BigInt>{-1, 0, 1}, "minimal polynomial is not X^2 - 1");
    });
}

void Runner::complex_checks() {
    std::optional<complex::FVector> fv;
    add("f_vector", [&](Check& c) {
        fv = complex::f_vector(g(), 0, opts_.max_cells);
        Json exp = Json::array(), obs = Json::array();
        bool ok = true;
        for (int m = 1; m <= opts_.n; ++m) {
            const BigInt e = oracle::frame_count(opts_.n, opts_.q, m);
            exp.push_back(report::integer(e));
            obs.push_back(fv->f[static_cast<std::size_t>(m) - 1]);
            ok = ok && BigInt(fv->f[static_cast<std::size_t>(m) - 1]) == e;
        }
        c.expected = exp;
        c.observed = obs;
        expect(c, ok, "f-vector differs from the frame counts");
    });
    add("euler_characteristic", [&](Check& c) {
        if (!fv) throw complex::BudgetExceeded("f-vector unavailable");
        const BigInt expected = oracle::euler_char(opts_.n, opts_.q);
        const BigInt observed = complex::euler_characteristic(*fv);
        c.expected = report::integer(expected);
        c.observed = report::integer(observed);
        expect(c, observed == expected, "Euler characteristic differs");
        if (opts_.n == 3) expect(c, oracle::euler_char_n3(opts_.q) == expected, "n = 3 closed form differs");
    });
    if (opts_.n <= 3)
        add("maximality", [&](Check& c) {
            const auto frames = complex::enumerate_frames(g(), opts_.n - 1, opts_.max_cells);
            std::uint64_t bad = 0;
            for (std::size_t i = 0; i < frames.size(); ++i)
                if (complex::extension_count(g(), frames[i]) != 1) ++bad;
            c.expected = {{"non_unique_extensions", 0}};
            c.observed = {{"non_unique_extensions", bad}, {"frames", frames.size()}};
            expect(c, bad == 0, "an (n-1)-frame does not extend uniquely");
        });
    add("homology", [&](Check& c) {
        complex::BettiOptions bo;
        bo.primes = opts_.primes;
        bo.max_cells = opts_.max_cells;
        bo.exact = opts_.exact;
        const auto rep = complex::betti(g(), bo);
        const int n = opts_.n;
        const int q = opts_.q;
        // Predicted values where the theory pins them down, null elsewhere.
        Json exp = Json::array();
        std::vector<std::optional<BigInt>> want(static_cast<std::size_t>(n));
        if (n == 2) {
            want[0] = BigInt(q * q * (q * q + 1) / 2 - 1);
        } else if (n == 3) {
            want[0] = 0;
            want[1] = -oracle::euler_char(3, q);
        }
        want[static_cast<std::size_t>(n) - 1] = 0;
        const int vanish = garland_vanishing_degree(n, q);
        for (int k = 0; k <= vanish && k < n; ++k) want[static_cast<std::size_t>(k)] = 0;
        for (const auto& w : want) exp.push_back(w ? report::integer(*w) : Json(nullptr));

        Json per = Json::object();
        bool ok = rep.agree;
        for (const auto& pb : rep.per_prime) {
            per[std::to_string(pb.p)] = big_list(pb.betti);
            ok = ok && pb.euler_residual == 0;
            for (std::size_t k = 0; k < want.size(); ++k)
                if (want[k]) ok = ok && pb.betti[k] == *want[k];
        }
        c.expected = exp;
        c.observed = {{"betti", per}, {"agree", rep.agree}};
        if (rep.exact) c.observed["exact"] = big_list(*rep.exact);
        expect(c, rep.agree, "Betti numbers differ between primes");
        expect(c, ok, "Betti numbers differ from the prediction");
    });
}

void Runner::garland() {
    add("garland", [&](Check& c) {
        const int n = opts_.n, q = opts_.q;
        const auto gr = oracle::garland_report(n, q);
        bool ok = true;
        const Rational p3 = oracle::p_value(3, q);
        ok = ok && p3 == Rational(q + 2) + Rational(1, q);
        ok = ok && oracle::p_value(4, q) == Rational(q * q + 4) + Rational(1, q * q);
        for (int j = 3; j < 12; ++j)
            for (int i = j + 1; i <= 12; ++i)
                ok = ok && oracle::p_value(i, q) - oracle::p_value(j, q) > i - j;
        ok = ok && gr.cm_char0 == (oracle::p_value(3, q) > n);
        ok = ok && gr.conn_n_minus_4 == (oracle::p_value(4, q) > n);
        for (long long m = 1; m <= 60; ++m)
            ok = ok && oracle::prop91_bound(m, q) == oracle::f_vector_inequality(static_cast<int>(m), q);
        c.expected = {{"consistent", true}};
        c.observed = {{"consistent", ok},
                      {"cm_char0", gr.cm_char0},
                      {"conn_n_minus_4", gr.conn_n_minus_4},
                      {"conn_half_n", gr.conn_half_n},
                      {"prop91_threshold", gr.prop91_threshold}};
        if (gr.lambda_min) c.observed["lambda_min"] = report::rational(*gr.lambda_min);
        expect(c, ok, "Garland predicates are inconsistent");
    });
}

VerifyReport Runner::run() {
    plane_count();
    if (opts_.r == 0 && opts_.n >= 2) {
        census();
        classify_checks();
        graph_checks();
        mu_checks();
        walks();
        witness();
        spectrum();
        complex_checks();
    }
    if (opts_.n >= 3) garland();
    return std::move(rep_);
}

}  // namespace

VerifyReport run_verify(const VerifyOptions& opts) { return Runner(opts).run(); }

}  // namespace frames::verify
