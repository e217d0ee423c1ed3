#pragma once

// Symplectic and r-degenerate symplectic spaces V = GF(q)^(2n+r).
//
// Coordinates 0..2n-1 carry the standard form
//     psi(e_i, e_{n+j}) = delta_ij = -psi(e_{n+j}, e_i),   psi(e_i, e_j) = 0 otherwise,
// and coordinates 2n..2n+r-1 span the radical.

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "frames/ff.hpp"

namespace frames::symp {

using ff::Elem;

inline constexpr int kMaxDim = 16;

class Vector {
public:
    Vector() = default;
    explicit Vector(int dim) : dim_(static_cast<std::uint8_t>(dim)) {}

    int dim() const noexcept { return dim_; }
    Elem operator[](int i) const noexcept { return c_[static_cast<std::size_t>(i)]; }
    Elem& operator[](int i) noexcept { return c_[static_cast<std::size_t>(i)]; }
    std::span<const Elem> coords() const noexcept { return {c_.data(), dim_}; }

    bool is_zero() const noexcept {
        for (int i = 0; i < dim_; ++i)
            if (c_[i] != 0) return false;
        return true;
    }

    friend bool operator==(const Vector& a, const Vector& b) noexcept {
        return a.dim_ == b.dim_ && a.c_ == b.c_;
    }

private:
    std::array<Elem, kMaxDim> c_{};  // entries past dim() stay zero
    std::uint8_t dim_ = 0;
};

/// An ordered pair (x, y) with psi(x, y) = 1.
struct SymplecticPair {
    Vector x;
    Vector y;
};

struct Projection {
    Elem vx = 0;  // psi(v, y)
    Elem vy = 0;  // -psi(v, x)
    Vector rest;  // v - vx*x - vy*y, the component in S^perp
};

class SympSpace;

/// Subspace in reduced row-echelon form; equal subspaces have identical rows.
class SubspaceBasis {
public:
    SubspaceBasis() = default;

    /// RREF of the span of `rows` (zero rows dropped).
    static SubspaceBasis span(const SympSpace& sp, std::vector<Vector> rows);

    int dim() const noexcept { return static_cast<int>(rows_.size()); }
    const std::vector<Vector>& rows() const noexcept { return rows_; }
    bool contains(const SympSpace& sp, const Vector& v) const;

    friend bool operator==(const SubspaceBasis&, const SubspaceBasis&) = default;

private:
    std::vector<Vector> rows_;
};

class SympSpace {
public:
    /// Throws std::invalid_argument for n < 1, r < 0, dimension above kMaxDim,
    /// or q^(2n+r) not representable in 64 bits.
    SympSpace(ff::FieldPtr field, int n, int r = 0);
    static SympSpace create(int q, int n, int r = 0) { return {ff::Field::create(q), n, r}; }

    const ff::Field& field() const noexcept { return *field_; }
    const ff::FieldPtr& field_ptr() const noexcept { return field_; }
    int q() const noexcept { return field_->q(); }
    int n() const noexcept { return n_; }
    int r() const noexcept { return r_; }
    int dim() const noexcept { return 2 * n_ + r_; }

    Vector zero() const { return Vector(dim()); }
    /// Standard basis vector, 0-based (e_1 of the usual notation is unit(0)).
    Vector unit(int i) const;

    Elem psi(const Vector& u, const Vector& v) const noexcept;
    /// The coefficient vector f with psi(s, v) = sum_i f_i v_i.
    Vector psi_functional(const Vector& s) const;

    Vector add(const Vector& a, const Vector& b) const;
    Vector sub(const Vector& a, const Vector& b) const;
    Vector scale(Elem c, const Vector& v) const;
    /// a + c*b
    Vector axpy(const Vector& a, Elem c, const Vector& b) const;

    /// Base-q integer, coordinate 0 most significant.
    std::uint64_t encode(const Vector& v) const noexcept;
    Vector decode(std::uint64_t code) const;
    std::uint64_t vector_count() const noexcept { return vector_count_; }
    /// Base-q digit string, coordinate 0 first; digits separated by '.' when q > 10.
    std::string to_digits(const Vector& v) const;

    SubspaceBasis whole() const;
    SubspaceBasis radical() const;

private:
    ff::FieldPtr field_;
    int n_;
    int r_;
    std::uint64_t vector_count_;
    std::vector<std::uint64_t> place_;  // q^(dim-1-i)
};

/// Rank of a list of vectors.
int rank(const SympSpace& sp, std::vector<Vector> rows);

/// Basis of { v : sum_i f_i v_i = 0 for every functional f }.
SubspaceBasis kernel(const SympSpace& sp, const std::vector<Vector>& functionals);

SubspaceBasis sum(const SympSpace& sp, const SubspaceBasis& a, const SubspaceBasis& b);
int intersection_dim(const SympSpace& sp, const SubspaceBasis& a, const SubspaceBasis& b);

Elem psi(const SympSpace& sp, const Vector& u, const Vector& v);
SubspaceBasis orth_complement(const SympSpace& sp, const SubspaceBasis& s);
/// dim(S cap S^perp): the corank of the Gram matrix of psi on S.
int radical_dim(const SympSpace& sp, const SubspaceBasis& s);
bool is_nondegenerate(const SympSpace& sp, const SubspaceBasis& s);

/// Decomposition v = vx*x + vy*y + rest with rest in <x,y>^perp.
/// Throws std::invalid_argument when psi(x, y) != 1.
Projection project(const SympSpace& sp, const Vector& v, const SymplecticPair& s);

/// w o_S u = w_x u_y - w_y u_x.
Elem circ(const SympSpace& sp, const SymplecticPair& s, const Vector& w, const Vector& u);

}  // namespace frames::symp
