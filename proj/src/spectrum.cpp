#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "frames/graph.hpp"
#include "frames/parallel.hpp"

namespace frames::graph {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr std::size_t kBlock = 8;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1;
    for (a %= m; e; e >>= 1, a = mulmod(a, a, m))
        if (e & 1) r = mulmod(r, a, m);
    return r;
}

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
        if (n % p == 0) return n == p;
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s && composite; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) composite = false;
        }
        if (composite) return false;
    }
    return true;
}

// Exact integers while every intermediate stays below 2^62.
struct Int64Ring {
    using value = long long;
    value from(const BigInt& v) const { return static_cast<long long>(v); }
    void add_to(value& acc, value x) const { acc += x; }
    void fma_to(value& acc, value c, value x) const { acc += c * x; }
};

struct ModRing {
    using value = u64;
    u64 p;
    value from(const BigInt& v) const {
        BigInt r = v % p;
        if (r < 0) r += p;
        return static_cast<u64>(r);
    }
    void add_to(value& acc, value x) const {
        acc += x;
        if (acc >= p) acc -= p;
    }
    void fma_to(value& acc, value c, value x) const { add_to(acc, mulmod(c, x, p)); }
};

// For every column block: powers A^k X for k <= powers, the diagonal
// contributions to tr(A^k) for k <= trace_top, and whether
// sum_k coeffs[k] A^k X vanishes.
template <class Ring>
bool run_columns(const OrthoGraph& g, const Ring& ring, const std::vector<BigInt>& coeffs,
                 int trace_top, std::vector<typename Ring::value>& traces) {
    using V = typename Ring::value;
    const std::size_t n = g.size();
    const int powers = std::max<int>(static_cast<int>(coeffs.size()) - 1, trace_top);
    std::vector<V> c(coeffs.size());
    for (std::size_t k = 0; k < coeffs.size(); ++k) c[k] = ring.from(coeffs[k]);

    traces.assign(static_cast<std::size_t>(trace_top) + 1, V{});
    bool annihilated = true;
    std::mutex merge;
    const std::size_t blocks = (n + kBlock - 1) / kBlock;

    parallel_chunks(blocks, [&](std::size_t lo, std::size_t hi) {
        std::vector<V> cur(n * kBlock), next(n * kBlock), acc(n * kBlock);
        std::vector<V> local(traces.size(), V{});
        bool ok = true;
        for (std::size_t blk = lo; blk < hi && ok; ++blk) {
            const std::size_t first = blk * kBlock;
            const std::size_t width = std::min(kBlock, n - first);
            std::fill(cur.begin(), cur.end(), V{});
            std::fill(acc.begin(), acc.end(), V{});
            for (std::size_t b = 0; b < width; ++b) cur[(first + b) * kBlock + b] = V{1};

            for (int k = 0;; ++k) {
                if (k <= trace_top)
                    for (std::size_t b = 0; b < width; ++b)
                        ring.add_to(local[static_cast<std::size_t>(k)], cur[(first + b) * kBlock + b]);
                if (static_cast<std::size_t>(k) < c.size() && c[static_cast<std::size_t>(k)] != V{})
                    for (std::size_t i = 0; i < n * kBlock; ++i)
                        ring.fma_to(acc[i], c[static_cast<std::size_t>(k)], cur[i]);
                if (k == powers) break;
                for (std::size_t v = 0; v < n; ++v) {
                    V row[kBlock] = {};
                    for (VertexId t : g.neighbors(static_cast<VertexId>(v))) {
                        const V* src = &cur[static_cast<std::size_t>(t) * kBlock];
                        for (std::size_t b = 0; b < kBlock; ++b) ring.add_to(row[b], src[b]);
                    }
                    std::copy(row, row + kBlock, &next[v * kBlock]);
                }
                cur.swap(next);
            }
            for (V x : acc)
                if (x != V{}) {
                    ok = false;
                    break;
                }
        }
        std::lock_guard lock(merge);
        if (!ok) annihilated = false;
        for (std::size_t k = 0; k < traces.size(); ++k) ring.add_to(traces[k], local[k]);
    });
    return annihilated;
}

// Solves sum_i m_i lambda_i^k = t_k (k < K) exactly; nothing if singular.
std::optional<std::vector<Rational>> solve_vandermonde(const std::vector<long long>& lambda,
                                                       const std::vector<BigInt>& t) {
    const std::size_t k = lambda.size();
    std::vector<std::vector<Rational>> m(k, std::vector<Rational>(k + 1));
    for (std::size_t row = 0; row < k; ++row) {
        for (std::size_t col = 0; col < k; ++col) m[row][col] = Rational(ipow(lambda[col], static_cast<long long>(row)));
        m[row][k] = Rational(t[row]);
    }
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t piv = col;
        while (piv < k && m[piv][col] == 0) ++piv;
        if (piv == k) return std::nullopt;
        std::swap(m[piv], m[col]);
        for (std::size_t row = 0; row < k; ++row) {
            if (row == col || m[row][col] == 0) continue;
            const Rational f = m[row][col] / m[col][col];
            for (std::size_t j = col; j <= k; ++j) m[row][j] -= f * m[col][j];
        }
    }
    std::vector<Rational> out(k);
    for (std::size_t i = 0; i < k; ++i) out[i] = m[i][k] / m[i][i];
    return out;
}

std::vector<BigInt> poly_from_roots(const std::vector<long long>& roots) {
    std::vector<BigInt> c{1};
    for (long long r : roots) {
        std::vector<BigInt> next(c.size() + 1, 0);
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i + 1] += c[i];
            next[i] -= c[i] * r;
        }
        c = std::move(next);
    }
    return c;
}

}  // namespace

SpectrumCertificate spectrum_certificate(const OrthoGraph& g, std::span<const long long> candidates) {
    SpectrumCertificate cert;
    std::vector<long long> lambda(candidates.begin(), candidates.end());
    std::sort(lambda.begin(), lambda.end());
    lambda.erase(std::unique(lambda.begin(), lambda.end()), lambda.end());
    cert.eigenvalues = lambda;
    if (lambda.empty()) {
        cert.failures.push_back("empty candidate list");
        return cert;
    }
    if (!g.is_regular()) cert.failures.push_back("graph is not regular");

    const std::size_t n = g.size();
    const BigInt d = g.degree();
    const auto coeffs = poly_from_roots(lambda);
    const int trace_top = std::max<int>(static_cast<int>(lambda.size()) - 1, 2);
    const int powers = std::max<int>(static_cast<int>(lambda.size()), trace_top);

    BigInt anni_bound = 1;
    for (long long l : lambda) anni_bound *= d + (l < 0 ? -l : l);
    const BigInt walk_bound = pow(d, static_cast<unsigned>(powers));
    const BigInt trace_bound = walk_bound * n;
    const BigInt limit = BigInt(1) << 62;

    if (anni_bound < limit && trace_bound < limit) {
        cert.arithmetic = "int64";
        std::vector<long long> tr;
        cert.annihilation_verified = run_columns(g, Int64Ring{}, coeffs, trace_top, tr);
        for (long long t : tr) cert.traces.emplace_back(t);
    } else {
        const BigInt need = 2 * std::max(anni_bound, trace_bound);
        std::vector<u64> primes;
        BigInt product = 1;
        for (u64 cand = (u64{1} << 61) - 1; product <= need; cand -= 2)
            if (is_prime_u64(cand)) {
                primes.push_back(cand);
                product *= cand;
            }
        cert.arithmetic = "multimodular:" + std::to_string(primes.size());
        cert.annihilation_verified = true;
        std::vector<BigInt> residue_sum(static_cast<std::size_t>(trace_top) + 1, 0);
        for (u64 p : primes) {
            std::vector<u64> tr;
            if (!run_columns(g, ModRing{p}, coeffs, trace_top, tr)) cert.annihilation_verified = false;
            // CRT, accumulated as sum t_i * (P/p_i) * ((P/p_i)^{-1} mod p_i).
            const BigInt rest = product / p;
            const u64 inv = powmod(static_cast<u64>(rest % p), p - 2, p);
            for (std::size_t k = 0; k < tr.size(); ++k) residue_sum[k] += BigInt(mulmod(tr[k], inv, p)) * rest;
        }
        for (auto& v : residue_sum) cert.traces.push_back(v % product);
    }
    if (!cert.annihilation_verified) cert.failures.push_back("candidate polynomial does not annihilate A");

    const auto sol = solve_vandermonde(lambda, cert.traces);
    if (!sol) {
        cert.failures.push_back("singular Vandermonde system");
        return cert;
    }
    cert.multiplicities_integral = true;
    cert.multiplicities_nonnegative = true;
    for (const Rational& m : *sol) {
        if (!is_integer(m)) {
            cert.multiplicities_integral = false;
            continue;
        }
        if (m < 0) cert.multiplicities_nonnegative = false;
    }
    if (!cert.multiplicities_integral) {
        cert.failures.push_back("non-integral multiplicity");
        return cert;
    }
    for (const Rational& m : *sol) cert.multiplicities.push_back(*as_integer(m));
    if (!cert.multiplicities_nonnegative) cert.failures.push_back("negative multiplicity");

    BigInt m0 = 0, m1 = 0, m2 = 0;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        m0 += cert.multiplicities[i];
        m1 += cert.multiplicities[i] * lambda[i];
        m2 += cert.multiplicities[i] * lambda[i] * lambda[i];
    }
    cert.moments_ok = m0 == n && m1 == 0 && m2 == d * n && cert.traces[2] == d * n;
    if (!cert.moments_ok) cert.failures.push_back("moment identities fail");

    std::vector<long long> present;
    for (std::size_t i = 0; i < lambda.size(); ++i)
        if (cert.multiplicities[i] > 0) present.push_back(lambda[i]);
    cert.minimal_polynomial = poly_from_roots(present);

    // Second-smallest eigenvalue of I - A/d.
    const auto top = std::find(lambda.begin(), lambda.end(), static_cast<long long>(g.degree()));
    if (d > 0 && top != lambda.end()) {
        const BigInt mtop = cert.multiplicities[static_cast<std::size_t>(top - lambda.begin())];
        if (mtop > 1) {
            cert.lambda_min_normalized = 0;
        } else {
            std::optional<long long> second;
            for (long long l : present)
                if (l < static_cast<long long>(g.degree())) second = l;
            cert.lambda_min_normalized =
                second ? Rational(1) - Rational(BigInt(*second), d) : Rational(1);
        }
    }
    return cert;
}

}  // namespace frames::graph
