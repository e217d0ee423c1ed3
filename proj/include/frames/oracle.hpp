#pragma once

// Closed-form counts for the orthogonality graph and frame complex of a
// 2n-dimensional symplectic space over GF(q). Everything is exact; there is
// no floating point in this module.
//
// The per-n quantities b_n, c_n, d_n, e0_n, e1_n, e2_n are defined for every
// integer n and evaluated literally, so small indices (d_1 = 0, q^(2n-5) at
// n = 2, ...) come out as the rational values of the formulas.

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "frames/exact.hpp"

namespace frames::oracle {

Rational b_n(long long n, long long q);   // |E_2(S)|
Rational c_n(long long n, long long q);   // |E_3(S)|
Rational d_n(long long n, long long q);   // |E_4(S)| = |G(S^perp)|
Rational e0_n(long long n, long long q);  // |E_5(S) u E_6(S)|
Rational e1_n(long long n, long long q);  // |E_5(S)|
Rational e2_n(long long n, long long q);  // |E_6(S)|

struct FormulaTable1 {
    BigInt b, c, d, e0, e1, e2;
};

/// |Sp_2n(q)| = q^(n^2) prod_{i=1..n} (q^(2i) - 1); 1 for n = 0.
BigInt sp_order(int n, int q);

/// Throws std::invalid_argument for n < 2.
FormulaTable1 table1(int n, int q);

/// Number of non-degenerate planes in an r-degenerate space of dimension 2n+r.
BigInt plane_count(int n, int q, int r);

struct MuTable {
    std::array<std::array<Rational, 6>, 6> entries;
    /// Row i is realized when E_i(S) is nonempty. Unrealized rows keep the
    /// literal formula values.
    std::array<bool, 6> realized{};

    BigInt row_sum_if_integral(int row) const;
};

/// Throws std::invalid_argument for n < 2.
MuTable mu_table(int n, int q);

/// Column 4 of the mu table: two-step walk counts by class.
std::array<Rational, 6> l2_vector(int n, int q);

/// Closed form for mu_5 in terms of dim(S+W) and whether psi(w_S, u_S) != 0.
Rational mu5_formula(int n, int q, int sum_dim, bool psi_ws_us_nonzero);

/// Number of m-frames; throws std::invalid_argument unless 0 <= m <= n.
BigInt frame_count(int n, int q, int m);
/// Reduced Euler characteristic of the frame complex.
BigInt euler_char(int n, int q);
/// -(q^12 + 2q^10 - q^8 - 2q^6 - 3q^4 + 3)/3, the n = 3 specialization.
BigInt euler_char_n3(int q);

/// Sorted roots of the minimal polynomial of the adjacency matrix, duplicates
/// collapsed. Throws std::invalid_argument for n < 2.
std::vector<BigInt> eigenvalues(int n, int q);

/// 1 - q^(3n-6)/d_n; throws std::invalid_argument for n < 3.
Rational lambda_min(int n, int q);

/// P_j(q) = (q^(2j-2) - 1) / (q^(j-2) (q^2 - 1)) + j - 1.
Rational p_value(int j, int q);

/// P_ceil(n/2)(q) > n with ceil(n/2) >= 3.
bool half_connectivity(int n, int q);

/// n > q^2(q^2+1) + n(n-2) / (q^4 (q^4+q^2+1)).
bool prop91_bound(long long n, int q);
/// f_n + f_{n-2} > f_{n-1} + f_{n-3}, with f_m = 0 for m < 0.
bool f_vector_inequality(int n, int q);
/// Smallest n >= 1 satisfying prop91_bound, by direct scan.
long long prop91_threshold(int q);

struct GarlandReport {
    int n = 0;
    int q = 0;
    std::optional<Rational> lambda_min;  // n >= 3 only
    std::map<int, Rational> p_values;    // j = 3..n
    bool cm_char0 = false;               // n < q + 3
    bool conn_n_minus_4 = false;         // n < q^2 + 4
    bool conn_half_n = false;
    bool prop91_bound = false;
    bool prop91_nonvanishing = false;    // the f-vector inequality
    long long prop91_threshold = 0;
};

GarlandReport garland_report(int n, int q);

}  // namespace frames::oracle
