#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "frames/complex.hpp"
#include "frames/graph.hpp"

namespace frames::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
    std::string command;
    int q = 2;
    int n = 2;
    int r = 0;
    std::string format = "json";  // json | csv
    std::string out;               // empty: the output stream
    std::uint64_t seed = graph::kDefaultSeed;
    std::vector<std::uint64_t> primes{complex::kDefaultPrimes[0], complex::kDefaultPrimes[1]};
    std::size_t samples = 0;  // 0: the per-command default
    std::uint64_t max_cells = complex::kDefaultMaxCells;
    bool exact = false;
    bool strict = false;
    bool timings = false;

    int walk_length = 2;
    std::uint32_t source = 0;
    std::uint32_t s_id = 0;
    std::uint32_t w_id = 0;
    std::string what = "table1";
    int n_max = 0;
    int max_dim = -1;
    int list_frames = 0;
    std::string export_dir;
};

/// Parses argv, runs one subcommand and writes its report. Returns 0 when
/// every executed check passes, 1 on a failed check (or a skip under
/// --strict), 2 on a usage error.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Runs an already parsed configuration.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace frames::cli
