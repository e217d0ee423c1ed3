#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "frames/cli.hpp"
#include "frames/report.hpp"

using namespace frames;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "frames");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

report::Json json_of(const Result& r) { return report::Json::parse(r.out); }

}  // namespace

TEST_CASE("oracle eigenvalues") {
    const auto r = run({"oracle", "--q", "2", "--n", "3", "--what", "eigen"});
    CHECK(r.code == cli::kExitPass);
    const auto j = json_of(r);
    CHECK(j["eigenvalues"] == report::Json::array({-8, -4, 2, 4, 8, 20}));
    CHECK(j["seed"] == 1729);
    CHECK(j["command"] == "oracle");
}

TEST_CASE("verify small instances") {
    const auto r22 = run({"verify", "--q", "2", "--n", "2"});
    CHECK(r22.code == cli::kExitPass);
    const auto j22 = json_of(r22);
    CHECK(j22["status"] == "pass");
    bool saw_components = false;
    for (const auto& c : j22["checks"])
        if (c["name"] == "connectivity") {
            saw_components = c["observed"]["components"] == 10;
            CHECK(c["status"] == "pass");
        }
    CHECK(saw_components);
    // The witness check does not apply at n = 2; that skip is not a budget skip.
    CHECK(run({"verify", "--q", "2", "--n", "2", "--strict"}).code == cli::kExitPass);

    const auto r32 = run({"verify", "--q", "2", "--n", "3"});
    CHECK(r32.code == cli::kExitPass);
    std::vector<std::string> names;
    const auto j32 = json_of(r32);
    for (const auto& c : j32["checks"]) {
        names.push_back(c["name"].get<std::string>());
        CHECK(c["status"] == "pass");
    }
    for (const char* want : {"census", "mu_table", "spectrum", "homology", "euler_characteristic"})
        CHECK(std::find(names.begin(), names.end(), want) != names.end());
}

TEST_CASE("exact values are rendered as strings") {
    const auto j = json_of(run({"garland", "--q", "2", "--n", "3"}));
    CHECK(j["lambda_min"] == "3/5");
    CHECK(j["p_values"]["3"] == "9/2");
    CHECK(j["prop91_threshold"] == 22);
}

TEST_CASE("CSV output") {
    const auto census = run({"census", "--q", "2", "--n", "3", "--format", "csv"});
    CHECK(census.code == cli::kExitPass);
    CHECK(census.out == "case,count\r\n1,1\r\n2,45\r\n3,90\r\n4,20\r\n5,180\r\n6,0\r\n");
    const auto spectrum = run({"spectrum", "--q", "2", "--n", "2", "--format", "csv"});
    CHECK(spectrum.out == "eigenvalue,multiplicity\r\n-1,10\r\n1,10\r\n");
    const auto field = run({"field", "--q", "4", "--format", "csv"});
    CHECK(field.out.rfind("key,value\r\n", 0) == 0);
}

TEST_CASE("reports are byte-identical across runs") {
    for (std::vector<std::string> args : {std::vector<std::string>{"mu", "--q", "3", "--n", "3", "--seed", "5"},
                                          {"census", "--q", "2", "--n", "4"},
                                          {"walks", "--q", "2", "--n", "3", "--r", "3", "--source", "7"}}) {
        const auto a = run(args), b = run(args);
        CHECK(a.code == cli::kExitPass);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("usage errors exit 2") {
    CHECK(run({}).code == cli::kExitUsage);
    CHECK(run({"bogus"}).code == cli::kExitUsage);
    CHECK(run({"census", "--q", "6", "--n", "2"}).code == cli::kExitUsage);
    CHECK(run({"census", "--q", "2", "--n", "1"}).code == cli::kExitUsage);
    CHECK(run({"census", "--q", "2", "--n", "2", "--format", "xml"}).code == cli::kExitUsage);
    CHECK(run({"classify", "--q", "2", "--n", "2", "--s", "0"}).code == cli::kExitUsage);
    CHECK(run({"classify", "--q", "2", "--n", "2", "--s", "0", "--w", "99"}).code == cli::kExitUsage);
    CHECK(run({"homology", "--q", "2", "--n", "3", "--primes", "4"}).code == cli::kExitUsage);
    const auto r = run({"field", "--q", "12"});
    CHECK(r.err.find("2^2 * 3") != std::string::npos);
}

TEST_CASE("budget skips exit 0, or 1 under --strict") {
    const auto r = run({"homology", "--q", "2", "--n", "3", "--max-cells", "100"});
    CHECK(r.code == cli::kExitPass);
    CHECK(json_of(r)["status"] == "skipped");
    CHECK(run({"homology", "--q", "2", "--n", "3", "--max-cells", "100", "--strict"}).code == cli::kExitFail);
    const auto v = run({"verify", "--q", "2", "--n", "3", "--max-cells", "100"});
    CHECK(v.code == cli::kExitPass);
    CHECK(run({"verify", "--q", "2", "--n", "3", "--max-cells", "100", "--strict"}).code == cli::kExitFail);
}

TEST_CASE("--out writes the report to a file") {
    const auto dir = std::filesystem::temp_directory_path() / "frames_cli_test";
    std::filesystem::create_directories(dir);
    const auto path = (dir / "census.json").string();
    const auto r = run({"census", "--q", "2", "--n", "2", "--out", path});
    CHECK(r.code == cli::kExitPass);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(report::Json::parse(ss.str())["command"] == "census");
}

TEST_CASE("homology export writes MatrixMarket files") {
    const auto dir = std::filesystem::temp_directory_path() / "frames_cli_export";
    std::filesystem::remove_all(dir);
    const auto r = run({"homology", "--q", "2", "--n", "3", "--export-dir", dir.string()});
    CHECK(r.code == cli::kExitPass);
    const auto j = json_of(r);
    CHECK(j["betti"]["1000003"] == report::Json::array({0, 1905, 0}));
    std::size_t files = 0;
    for (const auto& e : std::filesystem::directory_iterator(dir)) files += e.path().extension() == ".mtx";
    CHECK(files == 2);
}
