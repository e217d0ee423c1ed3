#pragma once

// Named brute-force checks of one (n, q, r) instance against the closed forms.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "frames/complex.hpp"
#include "frames/graph.hpp"
#include "frames/report.hpp"

namespace frames::verify {

enum class Status { pass, fail, skipped };

std::string_view to_string(Status s);

struct Check {
    std::string name;
    Status status = Status::pass;
    report::Json expected;
    report::Json observed;
    std::string reason;  // why it failed or was skipped
    bool over_budget = false;
    double seconds = 0;
};

struct VerifyOptions {
    int q = 2;
    int n = 2;
    int r = 0;
    std::uint64_t seed = graph::kDefaultSeed;
    /// Sampled pairs per class for mu on graphs above 1000 vertices.
    std::size_t samples = 25;
    /// Random base planes for the census above 1000 vertices.
    std::size_t census_bases = 10;
    std::vector<std::uint64_t> primes{complex::kDefaultPrimes[0], complex::kDefaultPrimes[1]};
    std::uint64_t max_cells = complex::kDefaultMaxCells;
    bool exact = false;
};

struct VerifyReport {
    VerifyOptions options;
    std::vector<Check> checks;

    bool failed() const;
    bool skipped_any() const;
    /// 1 on any failure, or on a budget skip under strict; 0 otherwise.
    int exit_code(bool strict) const;

    report::Json to_json(bool timings = false) const;
    report::Table to_table(bool timings = false) const;
};

VerifyReport run_verify(const VerifyOptions& opts);

/// Largest k with reduced H_k predicted to vanish by the Garland-type
/// spectral bounds, or -1 when they predict nothing.
int garland_vanishing_degree(int n, int q);

/// mu^r l_0 from the closed-form mu table.
std::array<Rational, 6> predicted_walks(int n, int q, int r);

}  // namespace frames::verify
