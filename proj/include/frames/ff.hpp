#pragma once

// Finite fields GF(q), q = p^k <= 1024, with table-driven arithmetic.
//
// Elements are carried as dense indices in [0, q). For k = 1 the index is the
// residue mod p; for k > 1 the base-p digits of the index are the
// coefficients of the polynomial representative (digit i <-> x^i).

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace frames::ff {

/// Field element index in [0, q).
using Elem = std::uint16_t;

inline constexpr int kMaxOrder = 1024;

struct FieldSpec {
    int p = 0;
    int k = 0;
    int q = 0;
    /// k+1 coefficients, low degree first, monic. {0, 1} (i.e. x) when k = 1.
    std::vector<int> modulus;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Splits q into p^k. Throws std::invalid_argument naming the factorization
/// when q is not a prime power, or when q is outside [2, kMaxOrder].
FieldSpec make_field(int q);

/// Brute-force irreducibility test of a monic polynomial over GF(p)
/// (coefficients low degree first).
bool is_irreducible(std::span<const int> poly, int p);

bool is_prime(long long v);

enum class Op { add, sub, mul, div, neg, inv, pow };

class Field {
public:
    explicit Field(FieldSpec spec);

    static std::shared_ptr<const Field> create(int q) {
        return std::make_shared<const Field>(make_field(q));
    }

    const FieldSpec& spec() const noexcept { return spec_; }
    int p() const noexcept { return spec_.p; }
    int q() const noexcept { return spec_.q; }
    bool is_prime_field() const noexcept { return spec_.k == 1; }

    Elem zero() const noexcept { return 0; }
    Elem one() const noexcept { return 1; }

    Elem add(Elem a, Elem b) const noexcept {
        return add_[static_cast<std::size_t>(a) * q_ + b];
    }
    Elem neg(Elem a) const noexcept { return neg_[a]; }
    Elem sub(Elem a, Elem b) const noexcept { return add(a, neg_[b]); }
    Elem mul(Elem a, Elem b) const noexcept {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    /// Throws std::domain_error when a == 0.
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    /// Exponent may be negative for nonzero a.
    Elem pow(Elem a, long long e) const;

    /// Generic dispatch; b is ignored for unary ops, and for pow it is read as
    /// a non-negative integer exponent.
    Elem apply(Op op, Elem a, Elem b) const;

    /// sum_i a_i * b_i.
    Elem dot(std::span<const Elem> a, std::span<const Elem> b) const noexcept;

    std::vector<Elem> elements() const;

    /// Primitive element used for the log tables.
    Elem generator() const noexcept { return exp_[1]; }
    /// Discrete log of a nonzero element.
    int log(Elem a) const noexcept { return log_[a]; }

    /// FNV-1a digest of the antilog table, hex encoded.
    std::string log_table_digest() const;

private:
    FieldSpec spec_;
    int q_;
    std::vector<Elem> add_;
    std::vector<Elem> neg_;
    std::vector<Elem> exp_;  // length 2(q-1), exp_[i] = g^i
    std::vector<int> log_;
};

using FieldPtr = std::shared_ptr<const Field>;

}  // namespace frames::ff
