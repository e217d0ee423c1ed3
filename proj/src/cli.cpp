#include "frames/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

#include "frames/oracle.hpp"
#include "frames/planes.hpp"
#include "frames/report.hpp"
#include "frames/verify.hpp"

namespace frames::cli {

using report::Json;
using report::Table;

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Output {
    explicit Output(Json j = Json::object()) : json(std::move(j)) {}

    Json json;
    std::optional<Table> table;  // CSV view; flattened JSON otherwise
    int code = kExitPass;
};

Json envelope(const RunConfig& cfg) {
    return Json{{"command", cfg.command}, {"q", cfg.q}, {"n", cfg.n}, {"r", cfg.r}, {"seed", cfg.seed}};
}

Json big_list(const std::vector<BigInt>& v) {
    Json j = Json::array();
    for (const auto& x : v) j.push_back(report::integer(x));
    return j;
}

template <class Array>
Json list(const Array& a) {
    Json j = Json::array();
    for (const auto& x : a) j.push_back(x);
    return j;
}

Json rref_json(const symp::SympSpace& sp, const planes::Plane& p) {
    Json rows = Json::array();
    for (const auto& v : p.rref) {
        Json row = Json::array();
        for (int i = 0; i < sp.dim(); ++i) row.push_back(v[i]);
        rows.push_back(row);
    }
    return rows;
}

graph::OrthoGraph build_graph(const RunConfig& cfg) {
    if (cfg.r != 0) throw UsageError("this command needs a non-degenerate space (--r 0)");
    if (cfg.n < 2) throw UsageError("this command needs --n >= 2");
    return graph::OrthoGraph::build(symp::SympSpace::create(cfg.q, cfg.n));
}

void require_vertex(const graph::OrthoGraph& g, std::uint32_t id, const char* flag) {
    if (id >= g.size())
        throw UsageError(std::string(flag) + " must be a plane id below " + std::to_string(g.size()));
}

// ---------------------------------------------------------------------------

Output cmd_field(const RunConfig& cfg) {
    const auto f = ff::Field::create(cfg.q);
    Output o{envelope(cfg)};
    o.json["p"] = f->p();
    o.json["k"] = f->spec().k;
    o.json["modulus"] = list(f->spec().modulus);
    o.json["generator"] = f->generator();
    o.json["log_table_digest"] = f->log_table_digest();
    return o;
}

Output cmd_enumerate(const RunConfig& cfg) {
    const auto sp = symp::SympSpace::create(cfg.q, cfg.n, cfg.r);
    const auto planes = planes::enumerate_planes(sp);
    Output o{envelope(cfg)};
    Json arr = Json::array();
    Table t{{"id", "row0", "row1"}, {}};
    for (const auto& p : planes) {
        arr.push_back({{"id", p.id}, {"rref", rref_json(sp, p)}});
        t.rows.push_back({std::to_string(p.id), std::to_string(p.key.first), std::to_string(p.key.second)});
    }
    o.json["count"] = planes.size();
    o.json["expected_count"] = report::integer(oracle::plane_count(cfg.n, cfg.q, cfg.r));
    o.json["planes"] = std::move(arr);
    o.table = std::move(t);
    return o;
}

Output cmd_census(const RunConfig& cfg) {
    const auto g = build_graph(cfg);
    std::vector<std::uint32_t> bases;
    const std::size_t want = cfg.samples ? cfg.samples : (g.size() <= 1000 ? g.size() : 10);
    if (want >= g.size()) {
        bases.resize(g.size());
        std::iota(bases.begin(), bases.end(), 0u);
    } else {
        std::mt19937_64 rng(cfg.seed);
        std::uniform_int_distribution<std::size_t> pick(0, g.size() - 1);
        for (std::size_t i = 0; i < want; ++i) bases.push_back(static_cast<std::uint32_t>(pick(rng)));
    }
    const auto s = planes::census_over(g.space(), g.vertices(), bases);
    const auto t1 = oracle::table1(cfg.n, cfg.q);
    const std::vector<BigInt> expected{1, t1.b, t1.c, t1.d, t1.e1, t1.e2};
    bool match = true;
    for (std::size_t i = 0; i < 6; ++i) match = match && BigInt(s.census[i]) == expected[i];

    Output o{envelope(cfg)};
    o.json["census"] = list(s.census);
    o.json["expected"] = big_list(expected);
    o.json["bases"] = s.bases;
    o.json["constant"] = s.constant;
    o.json["match"] = match;
    Table t{{"case", "count"}, {}};
    for (std::size_t i = 0; i < 6; ++i) t.rows.push_back({std::to_string(i + 1), std::to_string(s.census[i])});
    o.table = std::move(t);
    o.code = match && s.constant ? kExitPass : kExitFail;
    return o;
}

Output cmd_classify(const RunConfig& cfg) {
    const auto g = build_graph(cfg);
    require_vertex(g, cfg.s_id, "--s");
    require_vertex(g, cfg.w_id, "--w");
    const auto& s = g.vertex(cfg.s_id);
    const auto& w = g.vertex(cfg.w_id);
    const int fast = planes::case_number(planes::classify(g.space(), s, w));
    const int slow = planes::case_number(planes::classify_by_definition(g.space(), s, w));
    Output o{envelope(cfg)};
    o.json["s"] = {{"id", cfg.s_id}, {"rref", rref_json(g.space(), s)}};
    o.json["w"] = {{"id", cfg.w_id}, {"rref", rref_json(g.space(), w)}};
    o.json["case"] = fast;
    o.json["case_by_definition"] = slow;
    o.code = fast == slow ? kExitPass : kExitFail;
    return o;
}

Output cmd_graph(const RunConfig& cfg) {
    const auto g = build_graph(cfg);
    const auto cr = graph::components_and_diameter(g);
    Output o{envelope(cfg)};
    o.json["vertices"] = g.size();
    o.json["edges"] = g.edge_count();
    o.json["degree"] = g.degree();
    o.json["regular"] = g.is_regular();
    o.json["components"] = cr.count();
    o.json["component_sizes"] = list(cr.sizes);
    o.json["diameters"] = list(cr.diameters);
    o.json["expected_degree"] = report::exact(oracle::d_n(cfg.n, cfg.q));
    return o;
}

Output cmd_walks(const RunConfig& cfg) {
    const auto g = build_graph(cfg);
    require_vertex(g, cfg.source, "--source");
    if (cfg.walk_length < 0) throw UsageError("--r (walk length) must be non-negative");
    const auto wv = graph::walk_vector(g, cfg.source, cfg.walk_length);
    const auto pred = verify::predicted_walks(cfg.n, cfg.q, cfg.walk_length);
    Json l = Json::array(), p = Json::array();
    Table t{{"case", "walks", "predicted"}, {}};
    bool match = wv.class_constant;
    for (std::size_t i = 0; i < 6; ++i) {
        l.push_back(wv.realized[i] ? Json(wv.counts[i]) : Json(nullptr));
        p.push_back(report::exact(pred[i]));
        if (wv.realized[i]) match = match && Rational(wv.counts[i]) == pred[i];
        t.rows.push_back({std::to_string(i + 1), wv.realized[i] ? std::to_string(wv.counts[i]) : "",
                          to_fraction_string(pred[i])});
    }
    Output o{envelope(cfg)};
    o.json["length"] = cfg.walk_length;
    o.json["source"] = cfg.source;
    o.json["walks"] = std::move(l);
    o.json["predicted"] = std::move(p);
    o.json["class_constant"] = wv.class_constant;
    o.json["match"] = match;
    o.table = std::move(t);
    o.code = match ? kExitPass : kExitFail;
    return o;
}

Output cmd_mu(const RunConfig& cfg) {
    const auto g = build_graph(cfg);
    const auto policy = graph::SamplingPolicy::for_graph(g, cfg.samples ? cfg.samples : 25, cfg.seed);
    const auto emp = graph::empirical_mu(g, policy);
    const auto mu = oracle::mu_table(cfg.n, cfg.q);
    Json rows = Json::array(), orc = Json::array(), diff = Json::array();
    Table t{{"case", "mu1", "mu2", "mu3", "mu4", "mu5", "mu6", "pairs", "constant"}, {}};
    bool match = true;
    for (std::size_t i = 0; i < 6; ++i) {
        const auto& row = emp.rows[i];
        Json orow = Json::array();
        for (const auto& v : mu.entries[i]) orow.push_back(report::exact(v));
        orc.push_back(orow);
        match = match && row.realized == mu.realized[i];
        if (!row.realized) {
            rows.push_back(nullptr);
            diff.push_back(nullptr);
            t.rows.push_back({std::to_string(i + 1), "", "", "", "", "", "", "0", ""});
            continue;
        }
        Json drow = Json::array();
        std::vector<std::string> cells{std::to_string(i + 1)};
        for (std::size_t j = 0; j < 6; ++j) {
            const Rational d = Rational(row.counts[j]) - mu.entries[i][j];
            drow.push_back(report::exact(d));
            match = match && d == 0;
            cells.push_back(std::to_string(row.counts[j]));
        }
        cells.push_back(std::to_string(row.pairs));
        cells.push_back(row.constant ? "true" : "false");
        rows.push_back(list(row.counts));
        diff.push_back(drow);
        t.rows.push_back(std::move(cells));
    }
    Output o{envelope(cfg)};
    o.json["rows"] = std::move(rows);
    o.json["oracle"] = std::move(orc);
    o.json["oracle_realized"] = list(mu.realized);
    o.json["diff"] = std::move(diff);
    o.json["constant"] = emp.all_constant();
    o.json["exhaustive"] = policy.exhaustive;
    o.json["samples_per_class"] = policy.samples_per_class;
    o.json["match"] = match;
    o.table = std::move(t);
    o.code = match && emp.all_constant() ? kExitPass : kExitFail;
    return o;
}

Output cmd_spectrum(const RunConfig& cfg) {
    const auto g = build_graph(cfg);
    std::vector<long long> ev;
    for (const auto& e : oracle::eigenvalues(cfg.n, cfg.q)) ev.push_back(static_cast<long long>(e));
    const auto cert = graph::spectrum_certificate(g, ev);
    Output o{envelope(cfg)};
    o.json["eigenvalues"] = list(cert.eigenvalues);
    o.json["multiplicities"] = big_list(cert.multiplicities);
    o.json["traces"] = big_list(cert.traces);
    o.json["minimal_polynomial"] = big_list(cert.minimal_polynomial);
    o.json["annihilation_verified"] = cert.annihilation_verified;
    o.json["multiplicities_integral"] = cert.multiplicities_integral;
    o.json["multiplicities_nonnegative"] = cert.multiplicities_nonnegative;
    o.json["moments_ok"] = cert.moments_ok;
    o.json["lambda_min_normalized"] = report::rational(cert.lambda_min_normalized);
    if (cfg.n >= 3) o.json["expected_lambda_min"] = report::rational(oracle::lambda_min(cfg.n, cfg.q));
    o.json["arithmetic"] = cert.arithmetic;
    o.json["failures"] = list(cert.failures);
    o.json["passed"] = cert.passed();
    Table t{{"eigenvalue", "multiplicity"}, {}};
    for (std::size_t i = 0; i < cert.eigenvalues.size(); ++i)
        t.rows.push_back({std::to_string(cert.eigenvalues[i]),
                          i < cert.multiplicities.size() ? to_string(cert.multiplicities[i]) : ""});
    o.table = std::move(t);
    o.code = cert.passed() ? kExitPass : kExitFail;
    return o;
}

Output cmd_complex(const RunConfig& cfg) {
    const auto g = build_graph(cfg);
    Output o{envelope(cfg)};
    if (cfg.list_frames) {
        const auto frames = complex::enumerate_frames(g, cfg.list_frames, cfg.max_cells);
        Table t{{"frame"}, {}};
        for (int i = 1; i <= cfg.list_frames; ++i) t.header.push_back("plane" + std::to_string(i));
        Json arr = Json::array();
        for (std::size_t i = 0; i < frames.size(); ++i) {
            std::vector<std::string> row{std::to_string(i)};
            for (auto v : frames[i]) row.push_back(std::to_string(v));
            t.rows.push_back(std::move(row));
            arr.push_back(list(frames[i]));
        }
        o.json["m"] = cfg.list_frames;
        o.json["frames"] = std::move(arr);
        o.table = std::move(t);
        return o;
    }
    const int top = cfg.max_dim < 0 ? cfg.n : cfg.max_dim + 1;
    if (top < 1 || top > cfg.n) throw UsageError("--max-dim must lie in 0..n-1");
    const auto fv = complex::f_vector(g, top, cfg.max_cells);
    Json exp = Json::array();
    bool match = true;
    for (int m = 1; m <= top; ++m) {
        const BigInt e = oracle::frame_count(cfg.n, cfg.q, m);
        exp.push_back(report::integer(e));
        match = match && BigInt(fv.f[static_cast<std::size_t>(m) - 1]) == e;
    }
    o.json["f_vector"] = list(fv.f);
    o.json["expected_f_vector"] = std::move(exp);
    if (top == cfg.n) {
        const BigInt chi = complex::euler_characteristic(fv);
        const BigInt want = oracle::euler_char(cfg.n, cfg.q);
        o.json["euler_characteristic"] = report::integer(chi);
        o.json["expected_euler_characteristic"] = report::integer(want);
        match = match && chi == want;
    }
    o.json["match"] = match;
    o.code = match ? kExitPass : kExitFail;
    return o;
}

Output cmd_homology(const RunConfig& cfg) {
    const auto g = build_graph(cfg);
    complex::BettiOptions bo;
    bo.primes = cfg.primes;
    bo.max_cells = cfg.max_cells;
    bo.exact = cfg.exact;
    const auto rep = complex::betti(g, bo);
    Output o{envelope(cfg)};
    Json betti = Json::object(), ranks = Json::object(), residual = Json::object();
    bool euler_ok = true;
    for (const auto& pb : rep.per_prime) {
        betti[std::to_string(pb.p)] = big_list(pb.betti);
        ranks[std::to_string(pb.p)] = list(pb.ranks);
        residual[std::to_string(pb.p)] = report::integer(pb.euler_residual);
        euler_ok = euler_ok && pb.euler_residual == 0;
    }
    o.json["primes"] = list(cfg.primes);
    o.json["betti"] = std::move(betti);
    o.json["ranks"] = std::move(ranks);
    o.json["euler_residual"] = std::move(residual);
    o.json["f_vector"] = list(rep.f.f);
    o.json["euler_characteristic"] = report::integer(rep.euler_char);
    o.json["agree"] = rep.agree;
    if (rep.exact) o.json["exact"] = big_list(*rep.exact);
    if (!cfg.export_dir.empty()) {
        std::filesystem::create_directories(cfg.export_dir);
        const auto cc = complex::boundary_matrices(g, cfg.n - 1, cfg.primes.front(), cfg.max_cells);
        Json files = Json::array();
        for (int k = 1; k <= cc.max_dim(); ++k) {
            const auto path = std::filesystem::path(cfg.export_dir) / ("boundary_" + std::to_string(k) + ".mtx");
            std::ofstream os(path);
            complex::write_matrix_market(os, cc.boundary(k));
            files.push_back(path.string());
        }
        o.json["exported"] = std::move(files);
    }
    Table t{{"prime", "k", "betti"}, {}};
    for (const auto& pb : rep.per_prime)
        for (std::size_t k = 0; k < pb.betti.size(); ++k)
            t.rows.push_back({std::to_string(pb.p), std::to_string(k), to_string(pb.betti[k])});
    o.table = std::move(t);
    o.code = rep.agree && euler_ok ? kExitPass : kExitFail;
    return o;
}

Json garland_row(int n, int q) {
    const auto gr = oracle::garland_report(n, q);
    Json p = Json::object();
    for (const auto& [j, v] : gr.p_values) p[std::to_string(j)] = report::rational(v);
    Json row{{"n", n},
             {"p_values", std::move(p)},
             {"cm_char0", gr.cm_char0},
             {"conn_n_minus_4", gr.conn_n_minus_4},
             {"conn_half_n", gr.conn_half_n},
             {"prop91_bound", gr.prop91_bound},
             {"prop91_nonvanishing", gr.prop91_nonvanishing},
             {"prop91_threshold", gr.prop91_threshold}};
    row["lambda_min"] = gr.lambda_min ? report::rational(*gr.lambda_min) : Json(nullptr);
    return row;
}

Output cmd_garland(const RunConfig& cfg) {
    Output o{envelope(cfg)};
    if (cfg.n_max > 0) {
        if (cfg.n_max < 3) throw UsageError("--n-max must be at least 3");
        Json rows = Json::array();
        Table t{{"n", "lambda_min", "cm_char0", "conn_n_minus_4", "conn_half_n", "prop91_bound", "prop91_nonvanishing"}, {}};
        for (int n = 3; n <= cfg.n_max; ++n) {
            Json row = garland_row(n, cfg.q);
            t.rows.push_back({std::to_string(n), row["lambda_min"].get<std::string>(),
                              row["cm_char0"].dump(), row["conn_n_minus_4"].dump(), row["conn_half_n"].dump(),
                              row["prop91_bound"].dump(), row["prop91_nonvanishing"].dump()});
            rows.push_back(std::move(row));
        }
        o.json["n_max"] = cfg.n_max;
        o.json["rows"] = std::move(rows);
        o.json["prop91_threshold"] = oracle::prop91_threshold(cfg.q);
        o.table = std::move(t);
        return o;
    }
    o.json.update(garland_row(cfg.n, cfg.q));
    return o;
}

Output cmd_oracle(const RunConfig& cfg) {
    Output o{envelope(cfg)};
    if (cfg.what == "table1") {
        const auto t = oracle::table1(cfg.n, cfg.q);
        o.json["table1"] = {{"b", report::integer(t.b)},   {"c", report::integer(t.c)},
                            {"d", report::integer(t.d)},   {"e0", report::integer(t.e0)},
                            {"e1", report::integer(t.e1)}, {"e2", report::integer(t.e2)}};
    } else if (cfg.what == "mu") {
        const auto mu = oracle::mu_table(cfg.n, cfg.q);
        Json rows = Json::array();
        for (const auto& row : mu.entries) {
            Json r = Json::array();
            for (const auto& v : row) r.push_back(report::exact(v));
            rows.push_back(r);
        }
        o.json["mu"] = std::move(rows);
        o.json["realized"] = list(mu.realized);
    } else if (cfg.what == "eigen") {
        o.json["eigenvalues"] = big_list(oracle::eigenvalues(cfg.n, cfg.q));
    } else if (cfg.what == "fvec") {
        std::vector<BigInt> f;
        for (int m = 0; m <= cfg.n; ++m) f.push_back(oracle::frame_count(cfg.n, cfg.q, m));
        o.json["frame_counts"] = big_list(f);
    } else if (cfg.what == "euler") {
        o.json["euler_characteristic"] = report::integer(oracle::euler_char(cfg.n, cfg.q));
    } else {
        throw UsageError("--what must be one of table1, mu, eigen, fvec, euler");
    }
    return o;
}

Output cmd_verify(const RunConfig& cfg) {
    verify::VerifyOptions vo;
    vo.q = cfg.q;
    vo.n = cfg.n;
    vo.r = cfg.r;
    vo.seed = cfg.seed;
    if (cfg.samples) vo.samples = cfg.samples;
    vo.primes = cfg.primes;
    vo.max_cells = cfg.max_cells;
    vo.exact = cfg.exact;
    const auto rep = verify::run_verify(vo);
    Output o{envelope(cfg)};
    o.json.update(rep.to_json(cfg.timings));
    o.table = rep.to_table(cfg.timings);
    o.code = rep.exit_code(cfg.strict);
    return o;
}

Output dispatch(const RunConfig& cfg) {
    const std::string& c = cfg.command;
    if (c == "field") return cmd_field(cfg);
    if (c == "enumerate") return cmd_enumerate(cfg);
    if (c == "census") return cmd_census(cfg);
    if (c == "classify") return cmd_classify(cfg);
    if (c == "graph") return cmd_graph(cfg);
    if (c == "walks") return cmd_walks(cfg);
    if (c == "mu") return cmd_mu(cfg);
    if (c == "spectrum") return cmd_spectrum(cfg);
    if (c == "complex") return cmd_complex(cfg);
    if (c == "homology") return cmd_homology(cfg);
    if (c == "garland") return cmd_garland(cfg);
    if (c == "oracle") return cmd_oracle(cfg);
    if (c == "verify") return cmd_verify(cfg);
    throw UsageError("unknown command: " + c);
}

void validate(const RunConfig& cfg) {
    if (cfg.format != "json" && cfg.format != "csv") throw UsageError("--format must be json or csv");
    if (cfg.n < 1) throw UsageError("--n must be at least 1");
    if (cfg.r < 0) throw UsageError("--r must be non-negative");
    if (cfg.primes.empty()) throw UsageError("--primes needs at least one prime");
    for (auto p : cfg.primes)
        if (!ff::is_prime(static_cast<long long>(p))) throw UsageError("--primes: " + std::to_string(p) + " is not prime");
    ff::make_field(cfg.q);  // rejects non prime powers
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    Output o;
    try {
        validate(cfg);
        o = dispatch(cfg);
    } catch (const complex::BudgetExceeded& e) {
        o.json = envelope(cfg);
        o.json["status"] = "skipped";
        o.json["reason"] = e.what();
        o.code = cfg.strict ? kExitFail : kExitPass;
    } catch (const std::invalid_argument& e) {
        err << "frames: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "frames: " << e.what() << '\n';
        return kExitFail;
    }

    const std::string text = cfg.format == "csv" ? report::to_csv(o.table ? *o.table : report::flatten(o.json))
                                                  : report::to_json_text(o.json);
    if (cfg.out.empty()) {
        out << text;
    } else {
        std::ofstream f(cfg.out, std::ios::binary);
        if (!f) {
            err << "frames: cannot write " << cfg.out << '\n';
            return kExitFail;
        }
        f << text;
    }
    return o.code;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Symplectic frame complexes over finite fields: enumeration, spectra and homology", "frames"};
    app.require_subcommand(1, 1);
    RunConfig cfg;

    auto common = [&](CLI::App* sub, bool walk_r) {
        sub->add_option("--q", cfg.q, "field order (prime power)");
        sub->add_option("--n", cfg.n, "half the non-degenerate dimension");
        if (walk_r)
            sub->add_option("--r,--length", cfg.walk_length, "walk length");
        else
            sub->add_option("--r", cfg.r, "radical dimension");
        sub->add_option("--format,--report", cfg.format, "json or csv");
        sub->add_option("--out", cfg.out, "write the report to a file");
        sub->add_option("--seed", cfg.seed, "random seed");
        sub->add_option("--primes", cfg.primes, "primes for homology ranks")->delimiter(',');
        sub->add_option("--samples", cfg.samples, "sample count");
        sub->add_option("--max-cells", cfg.max_cells, "simplex budget");
        sub->add_flag("--exact", cfg.exact, "also compute ranks over the rationals");
        sub->add_flag("--strict", cfg.strict, "treat skipped checks as failures");
        sub->add_flag("--timings", cfg.timings, "include per-check runtimes");
    };

    const std::vector<std::pair<std::string, std::string>> commands{
        {"field", "field parameters and log-table digest"},
        {"enumerate", "list all non-degenerate planes"},
        {"census", "six-case census against the closed form"},
        {"classify", "classify one ordered pair of planes"},
        {"graph", "orthogonality graph summary"},
        {"walks", "walk counts by pair class"},
        {"mu", "empirical transition counts against the closed form"},
        {"spectrum", "exact spectrum certificate"},
        {"complex", "f-vector and Euler characteristic"},
        {"homology", "reduced Betti numbers"},
        {"garland", "spectral-gap vanishing predicates"},
        {"oracle", "closed-form values"},
        {"verify", "run every applicable check"},
    };
    for (const auto& [name, help] : commands) {
        CLI::App* sub = app.add_subcommand(name, help);
        common(sub, name == "walks");
        if (name == "walks") sub->add_option("--source", cfg.source, "source plane id");
        if (name == "classify") {
            sub->add_option("--s", cfg.s_id, "first plane id")->required();
            sub->add_option("--w", cfg.w_id, "second plane id")->required();
        }
        if (name == "complex") {
            sub->add_option("--max-dim", cfg.max_dim, "largest simplex dimension");
            sub->add_option("--frames", cfg.list_frames, "list all frames of this size");
        }
        if (name == "homology") sub->add_option("--export-dir", cfg.export_dir, "write boundary matrices here");
        if (name == "garland") sub->add_option("--n-max", cfg.n_max, "tabulate n = 3..n-max");
        if (name == "oracle") sub->add_option("--what", cfg.what, "table1, mu, eigen, fvec or euler");
        sub->callback([&cfg, name] { cfg.command = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }
    return run(cfg, out, err);
}

}  // namespace frames::cli
