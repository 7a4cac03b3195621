#pragma once

#include <vector>

#include "satake/errors.hpp"
#include "satake/linalg.hpp"
#include "satake/matrix.hpp"
#include "satake/numeric.hpp"

namespace satake {

/// Kostant sections, the interleaved characteristic-polynomial embedding
/// tau, regular centralizers, and the Shalika/Whittaker normal form.
/// Everything is phrased over a generic exact ring so the same code runs
/// symbolically (polynomial entries) and at rational sample points.

/// Companion matrix of x^s + c_1 x^{s-1} + ... + c_s: unit superdiagonal,
/// last row (-c_s, ..., -c_1).
template <class R>
Matrix<R> kostant_section(const std::vector<R>& c) {
    int s = static_cast<int>(c.size());
    if (s == 0) throw structural_error("kostant_section needs at least one coefficient");
    Matrix<R> m = Matrix<R>::zeros(s, c[0]);
    R one = ring_ops<R>::one_like(c[0]);
    for (int i = 0; i + 1 < s; ++i) m.at(i, i + 1) = one;
    for (int j = 0; j < s; ++j) m.at(s - 1, j) = ring_ops<R>::zero_like(c[0]) - c[static_cast<size_t>(s - 1 - j)];
    return m;
}

/// tau(C) = [[0, I_n], [C, 0]]; char poly of the image is p_C(x^2).
template <class R>
Matrix<R> tau_embed(const Matrix<R>& c) {
    int n = c.dim();
    Matrix<R> m = Matrix<R>::zeros(2 * n, c.exemplar());
    R one = ring_ops<R>::one_like(c.exemplar());
    for (int i = 0; i < n; ++i) {
        m.at(i, n + i) = one;
        for (int j = 0; j < n; ++j) m.at(n + i, j) = c.at(i, j);
    }
    return m;
}

/// Interleaving on characteristic polynomials: (c_1..c_n) -> (0,c_1,0,c_2,...,0,c_n).
template <class R>
std::vector<R> tau_interleave(const std::vector<R>& c) {
    std::vector<R> out;
    out.reserve(c.size() * 2);
    for (const auto& ci : c) {
        out.push_back(ring_ops<R>::zero_like(ci));
        out.push_back(ci);
    }
    return out;
}

/// The unshuffle permutation P sending the ordered basis
/// {e_1, e_3, ..., e_{2n-1}, e_2, e_4, ..., e_{2n}} to {e_1, ..., e_{2n}}:
/// P e_{2i-1} = e_i and P e_{2i} = e_{n+i}.
template <class R>
Matrix<R> unshuffle_permutation(int n, const R& exemplar) {
    Matrix<R> p = Matrix<R>::zeros(2 * n, exemplar);
    R one = ring_ops<R>::one_like(exemplar);
    for (int i = 1; i <= n; ++i) {
        p.at(i - 1, 2 * i - 2) = one;         // e_{2i-1} -> e_i
        p.at(n + i - 1, 2 * i - 1) = one;     // e_{2i}   -> e_{n+i}
    }
    return p;
}

/// The companion-matrix identity behind the Kostant-section construction:
/// kappa_{2n}(tau(c)) = P [[0, I], [kappa_n(c), 0]] P^{-1}, verified
/// without inversion as kappa_{2n}(tau(c)) P == P [[0,I],[kappa_n(c),0]].
template <class R>
bool companion_conjugation_check(const std::vector<R>& c) {
    int n = static_cast<int>(c.size());
    Matrix<R> kappa2n = kostant_section(tau_interleave(c));
    Matrix<R> block = tau_embed(kostant_section(c));
    Matrix<R> p = unshuffle_permutation<R>(n, c[0]);
    return kappa2n * p == p * block;
}

/// Regularity: the commutant of x has the minimal possible dimension,
/// equal to the matrix size.
inline bool is_regular(const RationalMatrix& x) {
    return centralizer_dimension(x) == x.dim();
}

/// diag(g, g), the fiberwise embedding of centralizers over tau.
/// Requires g to commute with C and be invertible.
inline RationalMatrix centralizer_embedding(const RationalMatrix& g, const RationalMatrix& c) {
    if (g.dim() != c.dim()) throw structural_error("dimension mismatch");
    if (g * c != c * g) throw precondition_error("g does not commute with C");
    if (ring_ops<Rat>::is_zero(g.det())) throw singular_matrix_error("g is not invertible");
    int n = g.dim();
    RationalMatrix m = RationalMatrix::zeros(2 * n, Rat(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            m.at(i, j) = g.at(i, j);
            m.at(n + i, n + j) = g.at(i, j);
        }
    return m;
}

/// The Whittaker-slice normal form: conjugating [[A, I], [C, -A]] by the
/// unipotent [[I,0],[X,I]] gives [[A-X, I], [C+XA+AX-X^2, X-A]]; the
/// unique U-translate with vanishing diagonal blocks is X = A, leaving
/// [[0, I], [C + A^2, 0]].
template <class R>
struct ShalikaResult {
    Matrix<R> normal_form;   // C + A^2
    bool verified;           // conjugation really lands on [[0,I],[C+A^2,0]]
};

/// Conjugate [[A,I],[C,-A]] by [[I,0],[X,I]] and return the result.
template <class R>
Matrix<R> shalika_conjugate(const Matrix<R>& a, const Matrix<R>& c, const Matrix<R>& x) {
    int n = a.dim();
    if (c.dim() != n || x.dim() != n) throw structural_error("dimension mismatch");
    const R& ex = a.exemplar();
    Matrix<R> m = Matrix<R>::zeros(2 * n, ex);
    R one = ring_ops<R>::one_like(ex);
    for (int i = 0; i < n; ++i) {
        m.at(i, n + i) = one;
        for (int j = 0; j < n; ++j) {
            m.at(i, j) = a.at(i, j);
            m.at(n + i, j) = c.at(i, j);
            m.at(n + i, n + j) = ring_ops<R>::zero_like(ex) - a.at(i, j);
        }
    }
    Matrix<R> u = Matrix<R>::identity(2 * n, ex);
    Matrix<R> uinv = u;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            u.at(n + i, j) = x.at(i, j);
            uinv.at(n + i, j) = ring_ops<R>::zero_like(ex) - x.at(i, j);
        }
    return u * m * uinv;
}

template <class R>
ShalikaResult<R> shalika_normal_form(const Matrix<R>& a, const Matrix<R>& c) {
    int n = a.dim();
    Matrix<R> normal = c + a * a;
    Matrix<R> conj = shalika_conjugate(a, c, a);
    Matrix<R> expected = tau_embed(normal);
    return ShalikaResult<R>{normal, conj == expected};
}

/// Ad_x tau(C) for invertible x; the characteristic polynomial of the
/// image depends only on C.
inline RationalMatrix moment_map_image(const RationalMatrix& x, const RationalMatrix& c) {
    if (x.dim() != 2 * c.dim()) throw structural_error("x must have twice the dimension of C");
    return matrix_conjugate(x, tau_embed(c));
}

/// Random rational matrix with small entries.
inline RationalMatrix random_rational_matrix(SplitMix64& rng, int dim, long max_num = 5, long max_den = 3) {
    RationalMatrix m(dim, Rat(0));
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) m.at(i, j) = rng.small_rational(max_num, max_den);
    return m;
}

inline RationalMatrix random_invertible_matrix(SplitMix64& rng, int dim, long max_num = 5, long max_den = 3) {
    for (;;) {
        RationalMatrix m = random_rational_matrix(rng, dim, max_num, max_den);
        if (m.det() != 0) return m;
    }
}

} // namespace satake
