#pragma once

#include <optional>
#include <vector>

#include "satake/errors.hpp"
#include "satake/multipoly.hpp"
#include "satake/numeric.hpp"

namespace satake {

/// Minimal ring interface used by Matrix. Both instantiations are
/// commutative Q-algebras, so scaling by a rational is always available.
template <class R>
struct ring_ops;

template <>
struct ring_ops<Rat> {
    static Rat zero_like(const Rat&) { return Rat(0); }
    static Rat one_like(const Rat&) { return Rat(1); }
    static bool is_zero(const Rat& x) { return x == 0; }
    static Rat scale(const Rat& x, const Rat& c) { return x * c; }
    static std::optional<Rat> exact_div(const Rat& a, const Rat& b) {
        if (b == 0) return std::nullopt;
        return a / b;
    }
};

template <>
struct ring_ops<MultiPolynomial> {
    static MultiPolynomial zero_like(const MultiPolynomial& x) {
        return MultiPolynomial::zero(x.nvars());
    }
    static MultiPolynomial one_like(const MultiPolynomial& x) {
        return MultiPolynomial::one(x.nvars());
    }
    static bool is_zero(const MultiPolynomial& x) { return x.is_zero(); }
    static MultiPolynomial scale(const MultiPolynomial& x, const Rat& c) { return x * c; }
    static std::optional<MultiPolynomial> exact_div(const MultiPolynomial& a,
                                                    const MultiPolynomial& b) {
        return MultiPolynomial::try_divide_exact(a, b);
    }
};

/// Square matrix over an exact commutative ring. Row-major storage; all
/// instances carry at least one entry, which doubles as the exemplar the
/// ring operations need (polynomials must agree on nvars).
template <class R>
class Matrix {
  public:
    Matrix(int dim, const R& fill) : dim_(dim), entries_(static_cast<size_t>(dim) * dim, fill) {
        if (dim <= 0) throw structural_error("matrix dimension must be positive");
    }

    static Matrix zeros(int dim, const R& exemplar) {
        return Matrix(dim, ring_ops<R>::zero_like(exemplar));
    }

    static Matrix identity(int dim, const R& exemplar) {
        Matrix m = zeros(dim, exemplar);
        R one = ring_ops<R>::one_like(exemplar);
        for (int i = 0; i < dim; ++i) m.at(i, i) = one;
        return m;
    }

    int dim() const { return dim_; }

    R& at(int r, int c) { return entries_[static_cast<size_t>(r) * dim_ + c]; }
    const R& at(int r, int c) const { return entries_[static_cast<size_t>(r) * dim_ + c]; }

    const R& exemplar() const { return entries_[0]; }

    bool operator==(const Matrix& o) const { return dim_ == o.dim_ && entries_ == o.entries_; }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix operator+(const Matrix& o) const {
        check_same_dim(o);
        Matrix r = *this;
        for (size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] + o.entries_[i];
        return r;
    }

    Matrix operator-(const Matrix& o) const {
        check_same_dim(o);
        Matrix r = *this;
        for (size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] - o.entries_[i];
        return r;
    }

    Matrix operator*(const Matrix& o) const {
        check_same_dim(o);
        Matrix r = zeros(dim_, exemplar());
        for (int i = 0; i < dim_; ++i) {
            for (int k = 0; k < dim_; ++k) {
                const R& aik = at(i, k);
                if (ring_ops<R>::is_zero(aik)) continue;
                for (int j = 0; j < dim_; ++j) {
                    r.at(i, j) = r.at(i, j) + aik * o.at(k, j);
                }
            }
        }
        return r;
    }

    Matrix scaled(const Rat& c) const {
        Matrix r = *this;
        for (auto& e : r.entries_) e = ring_ops<R>::scale(e, c);
        return r;
    }

    Matrix transpose() const {
        Matrix r = *this;
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) r.at(i, j) = at(j, i);
        return r;
    }

    R trace() const {
        R t = ring_ops<R>::zero_like(exemplar());
        for (int i = 0; i < dim_; ++i) t = t + at(i, i);
        return t;
    }

    bool is_zero_matrix() const {
        for (const auto& e : entries_)
            if (!ring_ops<R>::is_zero(e)) return false;
        return true;
    }

    Matrix power(int k) const {
        Matrix r = identity(dim_, exemplar());
        for (int i = 0; i < k; ++i) r = r * (*this);
        return r;
    }

    /// Characteristic polynomial coefficients (c_1, ..., c_s) of
    /// det(xI - M) = x^s + c_1 x^{s-1} + ... + c_s, by the
    /// Faddeev-LeVerrier recursion. Exact because the ring contains Q.
    std::vector<R> char_poly_coeffs() const {
        std::vector<R> coeffs;
        coeffs.reserve(static_cast<size_t>(dim_));
        Matrix m = *this; // M_1 = A
        for (int k = 1; k <= dim_; ++k) {
            R c = ring_ops<R>::scale(m.trace(), rat(-1, k));
            coeffs.push_back(c);
            if (k == dim_) break;
            Matrix mc = m;
            for (int i = 0; i < dim_; ++i) mc.at(i, i) = mc.at(i, i) + c;
            m = (*this) * mc;
        }
        return coeffs;
    }

    /// det(M) = (-1)^s c_s.
    R det() const {
        auto c = char_poly_coeffs();
        R d = c.back();
        if (dim_ % 2 == 1) d = ring_ops<R>::scale(d, Rat(-1));
        return d;
    }

    /// Adjugate via the Cayley-Hamilton identity:
    /// adj(M) = (-1)^{s+1} (M^{s-1} + c_1 M^{s-2} + ... + c_{s-1} I).
    Matrix adjugate() const {
        auto c = char_poly_coeffs();
        Matrix acc = identity(dim_, exemplar());
        for (int k = 0; k + 1 < dim_; ++k) {
            acc = (*this) * acc;
            for (int i = 0; i < dim_; ++i) acc.at(i, i) = acc.at(i, i) + c[static_cast<size_t>(k)];
        }
        if (dim_ % 2 == 0) acc = acc.scaled(Rat(-1));
        return acc;
    }

    /// Inverse when det is a unit that divides every adjugate entry;
    /// throws singular_matrix_error when det == 0 and
    /// non_polynomial_result_error when the division leaves the ring.
    Matrix inverse() const {
        R d = det();
        if (ring_ops<R>::is_zero(d)) throw singular_matrix_error("matrix is singular");
        Matrix adj = adjugate();
        Matrix r = adj;
        for (int i = 0; i < dim_; ++i) {
            for (int j = 0; j < dim_; ++j) {
                auto q = ring_ops<R>::exact_div(adj.at(i, j), d);
                if (!q) throw non_polynomial_result_error("inverse has non-polynomial entries");
                r.at(i, j) = *q;
            }
        }
        return r;
    }

  private:
    void check_same_dim(const Matrix& o) const {
        if (dim_ != o.dim_) throw structural_error("matrix dimension mismatch");
    }

    int dim_;
    std::vector<R> entries_;
};

using RationalMatrix = Matrix<Rat>;
using PolyMatrix = Matrix<MultiPolynomial>;

/// g x g^{-1} over the fraction field, cleared back to ring entries.
/// The result g·x·adj(g) must be divisible entrywise by det(g).
template <class R>
Matrix<R> matrix_conjugate(const Matrix<R>& g, const Matrix<R>& x) {
    if (g.dim() != x.dim()) throw structural_error("matrix dimension mismatch");
    R d = g.det();
    if (ring_ops<R>::is_zero(d)) throw singular_matrix_error("conjugating by a singular matrix");
    Matrix<R> num = g * x * g.adjugate();
    Matrix<R> r = num;
    for (int i = 0; i < g.dim(); ++i) {
        for (int j = 0; j < g.dim(); ++j) {
            auto q = ring_ops<R>::exact_div(num.at(i, j), d);
            if (!q) throw non_polynomial_result_error("conjugate is not polynomial");
            r.at(i, j) = *q;
        }
    }
    return r;
}

/// Characteristic polynomial of a rational matrix as monic coefficient
/// vector (1, c_1, ..., c_s).
inline std::vector<Rat> char_poly_monic(const RationalMatrix& m) {
    std::vector<Rat> out;
    out.reserve(static_cast<size_t>(m.dim()) + 1);
    out.emplace_back(1);
    for (auto& c : m.char_poly_coeffs()) out.push_back(c);
    return out;
}

/// Lift a rational matrix to polynomial entries over `nvars` variables.
inline PolyMatrix to_poly_matrix(const RationalMatrix& m, int nvars) {
    PolyMatrix r(m.dim(), MultiPolynomial::zero(nvars));
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) r.at(i, j) = MultiPolynomial::constant(nvars, m.at(i, j));
    return r;
}

/// Characteristic polynomial det(xI - M) of a polynomial matrix, as a
/// polynomial with one extra variable x appended after M's variables.
inline MultiPolynomial poly_char_poly(const PolyMatrix& m) {
    int nv = m.exemplar().nvars();
    PolyMatrix lifted(m.dim(), MultiPolynomial::zero(nv + 1));
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) lifted.at(i, j) = m.at(i, j).extend_vars(nv + 1);
    MultiPolynomial x = MultiPolynomial::variable(nv + 1, nv);
    PolyMatrix xi = PolyMatrix::identity(m.dim(), MultiPolynomial::zero(nv + 1));
    for (int i = 0; i < m.dim(); ++i) xi.at(i, i) = x;
    return (xi - lifted).det();
}

} // namespace satake
