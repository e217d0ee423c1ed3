#include "frames/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace frames::oracle {

namespace {

Rational rq(long long q) { return Rational(q); }

void require_n2(int n) {
    if (n < 2) throw std::invalid_argument("formula requires n >= 2");
}

BigInt integral(const Rational& r, const char* what) {
    auto v = as_integer(r);
    if (!v) throw std::logic_error(std::string("non-integral value for ") + what);
    return *v;
}

}  // namespace

Rational b_n(long long n, long long q) {
    return (rpow(q, 2 * n - 2) - 1) * (rq(q) + 1);
}

Rational c_n(long long n, long long q) {
    return (rpow(q, 2 * n - 2) - 1) * (rpow(q, 2 * n - 3) - rq(q));
}

Rational d_n(long long n, long long q) {
    return rpow(q, 2 * n - 4) * (rpow(q, 2 * n - 2) - 1) / (rq(q) * q - 1);
}

Rational e0_n(long long n, long long q) {
    return rpow(q, 2 * n - 4) * (rpow(q, 2 * n - 2) - 1) * (rq(q) * q - q + 1);
}

Rational e1_n(long long n, long long q) {
    return rpow(q, 2 * n - 4) * (rpow(q, 2 * n - 2) - 1) * (rq(q) + 1);
}

Rational e2_n(long long n, long long q) {
    return rpow(q, 2 * n - 3) * (rpow(q, 2 * n - 2) - 1) * (rq(q) - 2);
}

BigInt sp_order(int n, int q) {
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    BigInt r = ipow(q, static_cast<long long>(n) * n);
    for (int i = 1; i <= n; ++i) r *= ipow(q, 2 * i) - 1;
    return r;
}

FormulaTable1 table1(int n, int q) {
    require_n2(n);
    return {integral(b_n(n, q), "b_n"),   integral(c_n(n, q), "c_n"),
            integral(d_n(n, q), "d_n"),   integral(e0_n(n, q), "e0_n"),
            integral(e1_n(n, q), "e1_n"), integral(e2_n(n, q), "e2_n")};
}

BigInt plane_count(int n, int q, int r) {
    if (n < 1 || r < 0) throw std::invalid_argument("plane_count requires n >= 1, r >= 0");
    return integral(d_n(n + 1, q), "d_{n+1}") * ipow(q, 2LL * r);
}

BigInt MuTable::row_sum_if_integral(int row) const {
    Rational s = 0;
    for (const auto& v : entries[static_cast<std::size_t>(row)]) s += v;
    return integral(s, "mu row sum");
}

MuTable mu_table(int n, int q) {
    require_n2(n);
    const long long N = n;
    MuTable t;
    for (auto& row : t.entries) row.fill(Rational(0));
    auto& m = t.entries;
    const Rational q2 = rpow(q, 2);
    const Rational q4 = rpow(q, 4);

    m[0][3] = d_n(N, q);

    m[1][3] = d_n(N - 1, q) * q2;
    m[1][4] = rpow(q, 4 * N - 8);

    m[2][2] = rpow(q, 4 * N - 9);
    m[2][3] = d_n(N - 2, q) * q4;
    m[2][4] = rpow(q, 4 * N - 10) * (rq(q) + 1);
    m[2][5] = rpow(q, 4 * N - 9) * (rq(q) - 2);

    m[3][0] = 1;
    m[3][1] = b_n(N - 1, q);
    m[3][2] = c_n(N - 1, q);
    m[3][3] = d_n(N - 1, q);
    m[3][4] = e1_n(N - 1, q);
    m[3][5] = e2_n(N - 1, q);

    const Rational mixed = rpow(q, 2 * N - 5) * (rpow(q, 2 * N - 4) - 1);
    m[4][1] = rpow(q, 2 * N - 4);
    m[4][2] = mixed;
    m[4][3] = d_n(N - 1, q);
    m[4][4] = e1_n(N - 1, q);
    m[4][5] = e2_n(N - 1, q);

    m[5][2] = mixed;
    m[5][3] = d_n(N - 1, q);
    m[5][4] = e1_n(N - 1, q);
    m[5][5] = e2_n(N - 1, q) + rpow(q, 2 * N - 4);

    t.realized = {true,
                  b_n(N, q) > 0,
                  c_n(N, q) > 0,
                  d_n(N, q) > 0,
                  e1_n(N, q) > 0,
                  e2_n(N, q) > 0};
    return t;
}

std::array<Rational, 6> l2_vector(int n, int q) {
    const MuTable t = mu_table(n, q);
    std::array<Rational, 6> out;
    for (int i = 0; i < 6; ++i) out[i] = t.entries[i][3];
    return out;
}

Rational mu5_formula(int n, int q, int sum_dim, bool psi_ws_us_nonzero) {
    const long long N = n;
    Rational inner = rpow(q, 2 * N - 2) - rpow(q, 2 * N - sum_dim);
    if (psi_ws_us_nonzero) inner -= rpow(q, 2) - 1;
    return rpow(q, 2 * N - sum_dim - 2) / (rq(q) - 1) * inner;
}

BigInt frame_count(int n, int q, int m) {
    if (m < 0 || m > n) throw std::invalid_argument("frame size m must satisfy 0 <= m <= n");
    BigInt den = ipow(q, m) * ipow(static_cast<long long>(q) * q - 1, m) * sp_order(n - m, q);
    for (int i = 2; i <= m; ++i) den *= i;
    const BigInt num = sp_order(n, q);
    if (num % den != 0) throw std::logic_error("frame count is not integral");
    return num / den;
}

BigInt euler_char(int n, int q) {
    BigInt chi = 0;
    for (int m = 0; m <= n; ++m) {
        if (m % 2 == 0)
            chi -= frame_count(n, q, m);
        else
            chi += frame_count(n, q, m);
    }
    return chi;
}

BigInt euler_char_n3(int q) {
    const BigInt num = ipow(q, 12) + 2 * ipow(q, 10) - ipow(q, 8) - 2 * ipow(q, 6) -
                       3 * ipow(q, 4) + 3;
    if (num % 3 != 0) throw std::logic_error("n = 3 Euler characteristic not integral");
    return -(num / 3);
}

std::vector<BigInt> eigenvalues(int n, int q) {
    require_n2(n);
    const long long N = n;
    std::vector<BigInt> ev;
    ev.push_back(integral(d_n(N, q), "d_n"));
    if (n == 2) {
        ev.push_back(-ipow(q, 2 * N - 4));
    } else {
        ev.push_back(ipow(q, 2 * N - 5));
        ev.push_back(ipow(q, 2 * N - 4));
        ev.push_back(-ipow(q, 2 * N - 4));
        ev.push_back(ipow(q, 3 * N - 6));
        ev.push_back(-ipow(q, 3 * N - 6));
    }
    std::sort(ev.begin(), ev.end());
    ev.erase(std::unique(ev.begin(), ev.end()), ev.end());
    return ev;
}

Rational lambda_min(int n, int q) {
    if (n < 3) throw std::invalid_argument("lambda_min is defined for n >= 3");
    return Rational(1) - rpow(q, 3LL * n - 6) / d_n(n, q);
}

Rational p_value(int j, int q) {
    const long long J = j;
    return (rpow(q, 2 * J - 2) - 1) / (rpow(q, J - 2) * (rq(q) * q - 1)) + (J - 1);
}

bool half_connectivity(int n, int q) {
    const int j = (n + 1) / 2;
    return j >= 3 && p_value(j, q) > n;
}

bool prop91_bound(long long n, int q) {
    const Rational q2 = rpow(q, 2);
    const Rational rhs = q2 * (q2 + 1) +
                         Rational(BigInt(n) * (n - 2)) /
                             (rpow(q, 4) * (rpow(q, 4) + q2 + 1));
    return Rational(n) > rhs;
}

bool f_vector_inequality(int n, int q) {
    auto f = [&](int m) -> BigInt { return m < 0 ? BigInt(0) : frame_count(n, q, m); };
    return f(n) + f(n - 2) > f(n - 1) + f(n - 3);
}

long long prop91_threshold(int q) {
    // No n <= q^2(q^2+1) can satisfy the bound, so the scan starts there.
    const long long q2 = static_cast<long long>(q) * q;
    const long long start = std::max(1LL, q2 * (q2 + 1));
    for (long long n = start; n < start + (1LL << 20); ++n)
        if (prop91_bound(n, q)) return n;
    throw std::logic_error("prop91 threshold scan did not terminate");
}

GarlandReport garland_report(int n, int q) {
    GarlandReport g;
    g.n = n;
    g.q = q;
    if (n >= 3) g.lambda_min = lambda_min(n, q);
    for (int j = 3; j <= n; ++j) g.p_values.emplace(j, p_value(j, q));
    g.cm_char0 = n < q + 3;
    g.conn_n_minus_4 = static_cast<long long>(n) < static_cast<long long>(q) * q + 4;
    g.conn_half_n = half_connectivity(n, q);
    g.prop91_bound = prop91_bound(n, q);
    g.prop91_nonvanishing = n >= 1 && f_vector_inequality(n, q);
    g.prop91_threshold = prop91_threshold(q);
    return g;
}

}  // namespace frames::oracle
