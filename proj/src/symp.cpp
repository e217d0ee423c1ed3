#include "frames/symp.hpp"

#include <stdexcept>
#include <utility>

namespace frames::symp {

SympSpace::SympSpace(ff::FieldPtr field, int n, int r)
    : field_(std::move(field)), n_(n), r_(r) {
    if (!field_) throw std::invalid_argument("null field");
    if (n < 1) throw std::invalid_argument("half-rank n must be >= 1");
    if (r < 0) throw std::invalid_argument("radical dimension r must be >= 0");
    if (dim() > kMaxDim)
        throw std::invalid_argument("ambient dimension " + std::to_string(dim()) +
                                    " exceeds the supported maximum " +
                                    std::to_string(kMaxDim));
    const auto q = static_cast<unsigned __int128>(field_->q());
    unsigned __int128 count = 1;
    for (int i = 0; i < dim(); ++i) {
        count *= q;
        if (count > (static_cast<unsigned __int128>(1) << 63))
            throw std::invalid_argument("q^(2n+r) does not fit the 64-bit vector encoding");
    }
    vector_count_ = static_cast<std::uint64_t>(count);
    place_.assign(static_cast<std::size_t>(dim()), 1);
    for (int i = dim() - 2; i >= 0; --i) place_[i] = place_[i + 1] * field_->q();
}

Vector SympSpace::unit(int i) const {
    if (i < 0 || i >= dim()) throw std::out_of_range("basis index out of range");
    Vector v(dim());
    v[i] = 1;
    return v;
}

Elem SympSpace::psi(const Vector& u, const Vector& v) const noexcept {
    const ff::Field& f = *field_;
    if (f.is_prime_field()) {
        long long acc = 0;
        for (int i = 0; i < n_; ++i)
            acc += static_cast<long long>(u[i]) * v[n_ + i] -
                   static_cast<long long>(u[n_ + i]) * v[i];
        const int p = f.p();
        acc %= p;
        return static_cast<Elem>(acc < 0 ? acc + p : acc);
    }
    Elem acc = 0;
    for (int i = 0; i < n_; ++i) {
        acc = f.add(acc, f.mul(u[i], v[n_ + i]));
        acc = f.sub(acc, f.mul(u[n_ + i], v[i]));
    }
    return acc;
}

Vector SympSpace::psi_functional(const Vector& s) const {
    Vector f(dim());
    for (int i = 0; i < n_; ++i) {
        f[n_ + i] = s[i];
        f[i] = field_->neg(s[n_ + i]);
    }
    return f;
}

Vector SympSpace::add(const Vector& a, const Vector& b) const {
    Vector out(dim());
    for (int i = 0; i < dim(); ++i) out[i] = field_->add(a[i], b[i]);
    return out;
}

Vector SympSpace::sub(const Vector& a, const Vector& b) const {
    Vector out(dim());
    for (int i = 0; i < dim(); ++i) out[i] = field_->sub(a[i], b[i]);
    return out;
}

Vector SympSpace::scale(Elem c, const Vector& v) const {
    Vector out(dim());
    for (int i = 0; i < dim(); ++i) out[i] = field_->mul(c, v[i]);
    return out;
}

Vector SympSpace::axpy(const Vector& a, Elem c, const Vector& b) const {
    Vector out(dim());
    for (int i = 0; i < dim(); ++i) out[i] = field_->add(a[i], field_->mul(c, b[i]));
    return out;
}

std::uint64_t SympSpace::encode(const Vector& v) const noexcept {
    std::uint64_t code = 0;
    for (int i = 0; i < dim(); ++i) code += place_[i] * v[i];
    return code;
}

Vector SympSpace::decode(std::uint64_t code) const {
    if (code >= vector_count_) throw std::out_of_range("vector code out of range");
    Vector v(dim());
    const auto q = static_cast<std::uint64_t>(field_->q());
    for (int i = dim() - 1; i >= 0; --i) {
        v[i] = static_cast<Elem>(code % q);
        code /= q;
    }
    return v;
}

std::string SympSpace::to_digits(const Vector& v) const {
    std::string out;
    for (int i = 0; i < dim(); ++i) {
        if (field_->q() > 10 && i > 0) out += '.';
        out += std::to_string(v[i]);
    }
    return out;
}

SubspaceBasis SympSpace::whole() const {
    std::vector<Vector> rows;
    for (int i = 0; i < dim(); ++i) rows.push_back(unit(i));
    return SubspaceBasis::span(*this, std::move(rows));
}

SubspaceBasis SympSpace::radical() const {
    std::vector<Vector> rows;
    for (int i = 2 * n_; i < dim(); ++i) rows.push_back(unit(i));
    return SubspaceBasis::span(*this, std::move(rows));
}

namespace {

// In-place RREF; returns the rank and leaves the nonzero rows first.
int reduce(const ff::Field& f, std::vector<Vector>& rows, int dim) {
    int rank = 0;
    for (int col = 0; col < dim && rank < static_cast<int>(rows.size()); ++col) {
        int piv = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r) {
            if (rows[r][col] != 0) {
                piv = r;
                break;
            }
        }
        if (piv < 0) continue;
        std::swap(rows[rank], rows[piv]);
        const Elem inv = f.inv(rows[rank][col]);
        for (int i = col; i < dim; ++i) rows[rank][i] = f.mul(inv, rows[rank][i]);
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            const Elem c = f.neg(rows[r][col]);
            for (int i = col; i < dim; ++i)
                rows[r][i] = f.add(rows[r][i], f.mul(c, rows[rank][i]));
        }
        ++rank;
    }
    return rank;
}

}  // namespace

SubspaceBasis SubspaceBasis::span(const SympSpace& sp, std::vector<Vector> rows) {
    for (const auto& v : rows)
        if (v.dim() != sp.dim()) throw std::invalid_argument("vector dimension mismatch");
    const int r = reduce(sp.field(), rows, sp.dim());
    rows.resize(static_cast<std::size_t>(r));
    SubspaceBasis b;
    b.rows_ = std::move(rows);
    return b;
}

bool SubspaceBasis::contains(const SympSpace& sp, const Vector& v) const {
    std::vector<Vector> rows = rows_;
    rows.push_back(v);
    return rank(sp, std::move(rows)) == dim();
}

int rank(const SympSpace& sp, std::vector<Vector> rows) {
    return reduce(sp.field(), rows, sp.dim());
}

SubspaceBasis kernel(const SympSpace& sp, const std::vector<Vector>& functionals) {
    const ff::Field& f = sp.field();
    const int dim = sp.dim();
    std::vector<Vector> rows = functionals;
    const int r = reduce(f, rows, dim);
    rows.resize(static_cast<std::size_t>(r));

    std::vector<int> pivot_col(static_cast<std::size_t>(r));
    std::vector<bool> is_pivot(static_cast<std::size_t>(dim), false);
    for (int i = 0; i < r; ++i) {
        int c = 0;
        while (rows[i][c] == 0) ++c;
        pivot_col[i] = c;
        is_pivot[c] = true;
    }
    // One basis vector per free column.
    std::vector<Vector> basis;
    for (int free = 0; free < dim; ++free) {
        if (is_pivot[free]) continue;
        Vector v(dim);
        v[free] = 1;
        for (int i = 0; i < r; ++i) v[pivot_col[i]] = f.neg(rows[i][free]);
        basis.push_back(v);
    }
    return SubspaceBasis::span(sp, std::move(basis));
}

SubspaceBasis sum(const SympSpace& sp, const SubspaceBasis& a, const SubspaceBasis& b) {
    std::vector<Vector> rows = a.rows();
    rows.insert(rows.end(), b.rows().begin(), b.rows().end());
    return SubspaceBasis::span(sp, std::move(rows));
}

int intersection_dim(const SympSpace& sp, const SubspaceBasis& a, const SubspaceBasis& b) {
    return a.dim() + b.dim() - sum(sp, a, b).dim();
}

Elem psi(const SympSpace& sp, const Vector& u, const Vector& v) {
    if (u.dim() != sp.dim() || v.dim() != sp.dim())
        throw std::invalid_argument("vector dimension mismatch");
    return sp.psi(u, v);
}

SubspaceBasis orth_complement(const SympSpace& sp, const SubspaceBasis& s) {
    std::vector<Vector> functionals;
    functionals.reserve(s.rows().size());
    for (const auto& row : s.rows()) functionals.push_back(sp.psi_functional(row));
    return kernel(sp, functionals);
}

int radical_dim(const SympSpace& sp, const SubspaceBasis& s) {
    // Gram matrix rows, padded into Vectors of the ambient dimension.
    const int d = s.dim();
    std::vector<Vector> gram;
    for (int i = 0; i < d; ++i) {
        Vector row(sp.dim());
        for (int j = 0; j < d; ++j) row[j] = sp.psi(s.rows()[i], s.rows()[j]);
        gram.push_back(row);
    }
    return d - rank(sp, std::move(gram));
}

bool is_nondegenerate(const SympSpace& sp, const SubspaceBasis& s) {
    if (radical_dim(sp, s) != 0) return false;
    if (sp.r() == 0) {
        const SubspaceBasis perp = orth_complement(sp, s);
        if (s.dim() + perp.dim() != 2 * sp.n() || intersection_dim(sp, s, perp) != 0)
            throw std::logic_error("non-degenerate subspace without a complementary perp");
    }
    return true;
}

Projection project(const SympSpace& sp, const Vector& v, const SymplecticPair& s) {
    if (sp.psi(s.x, s.y) != 1) throw std::invalid_argument("basis is not symplectic");
    const ff::Field& f = sp.field();
    Projection out;
    out.vx = sp.psi(v, s.y);
    out.vy = f.neg(sp.psi(v, s.x));
    out.rest = sp.axpy(sp.axpy(v, f.neg(out.vx), s.x), f.neg(out.vy), s.y);
    return out;
}

Elem circ(const SympSpace& sp, const SymplecticPair& s, const Vector& w, const Vector& u) {
    const ff::Field& f = sp.field();
    const Elem wx = sp.psi(w, s.y);
    const Elem wy = f.neg(sp.psi(w, s.x));
    const Elem ux = sp.psi(u, s.y);
    const Elem uy = f.neg(sp.psi(u, s.x));
    return f.sub(f.mul(wx, uy), f.mul(wy, ux));
}

}  // namespace frames::symp
