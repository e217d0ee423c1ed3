#include "frames/ff.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace frames::ff {

namespace {

std::vector<int> digits_of(int index, int p, int k) {
    std::vector<int> d(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        d[i] = index % p;
        index /= p;
    }
    return d;
}

int index_of(const std::vector<int>& d, int p) {
    int v = 0;
    for (auto it = d.rbegin(); it != d.rend(); ++it) v = v * p + *it;
    return v;
}

int mod(long long a, int p) {
    long long r = a % p;
    return static_cast<int>(r < 0 ? r + p : r);
}

// Remainder of num modulo a monic den, both low degree first.
std::vector<int> poly_rem(std::vector<int> num, std::span<const int> den, int p) {
    const std::size_t dd = den.size() - 1;
    while (num.size() > dd) {
        const int lead = num.back();
        if (lead != 0) {
            const std::size_t shift = num.size() - 1 - dd;
            for (std::size_t i = 0; i <= dd; ++i)
                num[shift + i] = mod(num[shift + i] - static_cast<long long>(lead) * den[i], p);
        }
        num.pop_back();
    }
    return num;
}

// Product of two residues modulo the field modulus.
int slow_mul(int a, int b, const FieldSpec& f) {
    const auto da = digits_of(a, f.p, f.k);
    const auto db = digits_of(b, f.p, f.k);
    std::vector<int> prod(static_cast<std::size_t>(2 * f.k - 1), 0);
    for (int i = 0; i < f.k; ++i)
        for (int j = 0; j < f.k; ++j)
            prod[i + j] = mod(prod[i + j] + static_cast<long long>(da[i]) * db[j], f.p);
    auto r = poly_rem(std::move(prod), f.modulus, f.p);
    r.resize(static_cast<std::size_t>(f.k), 0);
    return index_of(r, f.p);
}

}  // namespace

bool is_prime(long long v) {
    if (v < 2) return false;
    for (long long d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

bool is_irreducible(std::span<const int> poly, int p) {
    const int deg = static_cast<int>(poly.size()) - 1;
    if (deg < 1 || poly.back() != 1) return false;
    // Try every monic divisor of degree 1..deg/2.
    for (int d = 1; 2 * d <= deg; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long long c = 0; c < count; ++c) {
            std::vector<int> div = digits_of(static_cast<int>(c), p, d);
            div.push_back(1);
            auto r = poly_rem(std::vector<int>(poly.begin(), poly.end()), div, p);
            bool zero = true;
            for (int x : r) zero = zero && x == 0;
            if (zero) return false;
        }
    }
    return true;
}

FieldSpec make_field(int q) {
    if (q < 2 || q > kMaxOrder)
        throw std::invalid_argument("field order q=" + std::to_string(q) +
                                    " outside supported range [2, " +
                                    std::to_string(kMaxOrder) + "]");
    int p = 0;
    for (int d = 2; d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    int k = 0;
    int rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++k;
    }
    if (rest != 1) {
        std::ostringstream msg;
        msg << "q=" << q << " is not a prime power: q = " << p;
        if (k > 1) msg << "^" << k;
        msg << " * " << rest;
        throw std::invalid_argument(msg.str());
    }

    FieldSpec f{p, k, q, {}};
    if (k == 1) {
        f.modulus = {0, 1};
        return f;
    }
    // Candidates ordered lexicographically with the constant term compared
    // first: the constant coefficient is the most significant digit.
    const int count = q;  // p^k choices for the k low coefficients
    for (int c = 0; c < count; ++c) {
        std::vector<int> poly(static_cast<std::size_t>(k) + 1);
        int v = c;
        for (int i = k - 1; i >= 0; --i) {
            poly[i] = v % p;
            v /= p;
        }
        poly[k] = 1;
        if (is_irreducible(poly, p)) {
            f.modulus = std::move(poly);
            return f;
        }
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable
}

Field::Field(FieldSpec spec) : spec_(std::move(spec)), q_(spec_.q) {
    const int p = spec_.p;
    const int k = spec_.k;
    const auto qs = static_cast<std::size_t>(q_);

    add_.resize(qs * qs);
    neg_.resize(qs);
    for (int a = 0; a < q_; ++a) {
        const auto da = digits_of(a, p, k);
        std::vector<int> dn(da.size());
        for (std::size_t i = 0; i < da.size(); ++i) dn[i] = mod(-da[i], p);
        neg_[a] = static_cast<Elem>(index_of(dn, p));
        for (int b = 0; b < q_; ++b) {
            const auto db = digits_of(b, p, k);
            std::vector<int> ds(da.size());
            for (std::size_t i = 0; i < da.size(); ++i) ds[i] = (da[i] + db[i]) % p;
            add_[static_cast<std::size_t>(a) * qs + b] = static_cast<Elem>(index_of(ds, p));
        }
    }

    // Smallest primitive element.
    exp_.assign(2 * (qs - 1), 0);
    log_.assign(qs, 0);
    if (q_ == 2) {
        exp_[0] = exp_[1] = 1;
        return;
    }
    for (int g = 2; g < q_; ++g) {
        int x = 1;
        int order = 0;
        do {
            x = slow_mul(x, g, spec_);
            ++order;
        } while (x != 1);
        if (order == q_ - 1) {
            x = 1;
            for (int i = 0; i < q_ - 1; ++i) {
                exp_[i] = exp_[i + q_ - 1] = static_cast<Elem>(x);
                log_[x] = i;
                x = slow_mul(x, g, spec_);
            }
            return;
        }
    }
    throw std::logic_error("no primitive element found");  // unreachable
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw std::domain_error("division by zero in GF(" + std::to_string(q_) + ")");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Elem Field::pow(Elem a, long long e) const {
    if (a == 0) {
        if (e < 0) throw std::domain_error("zero raised to a negative power");
        return e == 0 ? 1 : 0;
    }
    const long long m = q_ - 1;
    long long idx = (static_cast<long long>(log_[a]) * (e % m)) % m;
    if (idx < 0) idx += m;
    return exp_[static_cast<std::size_t>(idx)];
}

Elem Field::apply(Op op, Elem a, Elem b) const {
    switch (op) {
        case Op::add: return add(a, b);
        case Op::sub: return sub(a, b);
        case Op::mul: return mul(a, b);
        case Op::div: return div(a, b);
        case Op::neg: return neg(a);
        case Op::inv: return inv(a);
        case Op::pow: return pow(a, b);
    }
    return 0;
}

Elem Field::dot(std::span<const Elem> a, std::span<const Elem> b) const noexcept {
    if (spec_.k == 1) {
        long long acc = 0;
        for (std::size_t i = 0; i < a.size(); ++i) acc += static_cast<long long>(a[i]) * b[i];
        return static_cast<Elem>(acc % spec_.p);
    }
    Elem acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc = add(acc, mul(a[i], b[i]));
    return acc;
}

std::vector<Elem> Field::elements() const {
    std::vector<Elem> out(static_cast<std::size_t>(q_));
    for (int i = 0; i < q_; ++i) out[i] = static_cast<Elem>(i);
    return out;
}

std::string Field::log_table_digest() const {
    std::uint64_t h = 1469598103934665603ull;
    for (Elem e : exp_) {
        h ^= static_cast<std::uint64_t>(e & 0xff);
        h *= 1099511628211ull;
        h ^= static_cast<std::uint64_t>(e >> 8);
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace frames::ff
