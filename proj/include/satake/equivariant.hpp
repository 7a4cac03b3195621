#pragma once

#include <string>
#include <vector>

#include "satake/errors.hpp"
#include "satake/matrix.hpp"
#include "satake/multipoly.hpp"

namespace satake {

/// Symbolic equivariant cohomology of P^{2n-1} and HP^{n-1}. Rings are
/// presented as C[t_1..t_m][w]/(relation) with the class variable w
/// stored last; elements are reduced representatives of class-degree
/// less than the relation's.

enum class RingKind {
    ComplexFull,       // C[t_1..t_2n][xi] / prod_{i=1}^{2n} (xi - t_i)
    ComplexRestricted, // C[t_1..t_n][xi]  / prod_{i=1}^{n} (xi^2 - t_i^2)
    QuaternionicHP     // C[t_1..t_n][eta] / prod_{i=1}^{n} (eta - t_i^2)
};

struct EquivariantRing {
    RingKind kind;
    int n;          // rank parameter of the family
    int nvars;      // torus variables + 1 class variable
    int class_var;  // index of xi / eta (always nvars - 1)
    int rank;       // rank as a module over the torus coefficients
    MultiPolynomial relation;

    MultiPolynomial var_t(int i, int power = 1) const {
        return MultiPolynomial::variable(nvars, i, power);
    }
    MultiPolynomial var_class(int power = 1) const {
        return MultiPolynomial::variable(nvars, class_var, power);
    }
    MultiPolynomial constant(const Rat& c) const { return MultiPolynomial::constant(nvars, c); }
    MultiPolynomial zero() const { return MultiPolynomial::zero(nvars); }
    MultiPolynomial one() const { return MultiPolynomial::one(nvars); }

    std::string class_var_name() const { return kind == RingKind::QuaternionicHP ? "eta" : "xi"; }

    std::vector<std::string> var_names() const {
        return t_names_with(nvars - 1, class_var_name());
    }

    /// Canonical representative: divide by the relation (monic in the
    /// class variable) until the class-degree drops below the relation's.
    MultiPolynomial reduce(MultiPolynomial p) const {
        int rel_deg = relation.degree_in(class_var);
        for (;;) {
            int d = p.degree_in(class_var);
            if (d < rel_deg) return p;
            MultiPolynomial lead = p.coefficient_of(class_var, d);
            MultiPolynomial shift = MultiPolynomial::variable(nvars, class_var, d - rel_deg);
            p = p - lead * shift * relation;
        }
    }
};

inline EquivariantRing make_complex_full_ring(int n) {
    EquivariantRing r;
    r.kind = RingKind::ComplexFull;
    r.n = n;
    r.nvars = 2 * n + 1;
    r.class_var = 2 * n;
    r.rank = 2 * n;
    MultiPolynomial rel = MultiPolynomial::one(r.nvars);
    for (int i = 0; i < 2 * n; ++i) rel = rel * (r.var_class() - r.var_t(i));
    r.relation = rel;
    return r;
}

inline EquivariantRing make_complex_restricted_ring(int n) {
    EquivariantRing r;
    r.kind = RingKind::ComplexRestricted;
    r.n = n;
    r.nvars = n + 1;
    r.class_var = n;
    r.rank = 2 * n;
    MultiPolynomial rel = MultiPolynomial::one(r.nvars);
    for (int i = 0; i < n; ++i) rel = rel * (r.var_class(2) - r.var_t(i, 2));
    r.relation = rel;
    return r;
}

inline EquivariantRing make_quaternionic_ring(int n) {
    EquivariantRing r;
    r.kind = RingKind::QuaternionicHP;
    r.n = n;
    r.nvars = n + 1;
    r.class_var = n;
    r.rank = n;
    MultiPolynomial rel = MultiPolynomial::one(r.nvars);
    for (int i = 0; i < n; ++i) rel = rel * (r.var_class() - r.var_t(i, 2));
    r.relation = rel;
    return r;
}

/// Torus weight of the i-th coordinate line, 0-based: t_i in the full
/// ring; t_i for i < n and -t_{i-n} for i >= n in the restricted one.
inline MultiPolynomial fixed_point_weight(const EquivariantRing& ring, int i) {
    switch (ring.kind) {
        case RingKind::ComplexFull:
            return ring.var_t(i);
        case RingKind::ComplexRestricted:
            return i < ring.n ? ring.var_t(i) : -ring.var_t(i - ring.n);
        case RingKind::QuaternionicHP:
            return ring.var_t(i, 2);
    }
    throw structural_error("unknown ring kind");
}

/// Equivariant localization: restrict a class to the torus fixed points.
/// Complex rings substitute xi -> (weight of the i-th line); the
/// quaternionic ring substitutes eta -> t_i^2.
inline std::vector<MultiPolynomial> localization_map(const EquivariantRing& ring,
                                                     const MultiPolynomial& x) {
    std::vector<MultiPolynomial> images;
    for (int i = 0; i < ring.rank; ++i)
        images.push_back(x.substitute(ring.class_var, fixed_point_weight(ring, i)));
    return images;
}

/// Twistor pullback f^*: H_T(HP^{n-1}) -> H_T(P^{2n-1}) restricted ring,
/// the C[t]-algebra map sending eta to xi^2.
inline MultiPolynomial twistor_pullback(const EquivariantRing& source,
                                        const EquivariantRing& target,
                                        const MultiPolynomial& x) {
    if (source.kind != RingKind::QuaternionicHP || target.kind != RingKind::ComplexRestricted)
        throw structural_error("twistor pullback goes from the HP ring to the restricted P ring");
    if (source.n != target.n) throw structural_error("rank mismatch");
    return target.reduce(x.substitute(source.class_var, target.var_class(2)));
}

/// Ordered fundamental-class bases (reduced ring elements).
enum class BasisLabel { Upsilon, UpsilonH, UpsilonPrime };

struct ClassBasis {
    BasisLabel label;
    std::vector<MultiPolynomial> elements;
};

/// Upsilon basis b_i = prod_{s=i+1}^{2n} (xi - t_s), i = 1..2n, in the
/// full or restricted complex ring (empty product = 1 at i = 2n).
inline ClassBasis upsilon_basis(const EquivariantRing& ring) {
    if (ring.kind == RingKind::QuaternionicHP) throw structural_error("Upsilon lives in the complex rings");
    int N = ring.rank;
    ClassBasis b;
    b.label = BasisLabel::Upsilon;
    for (int i = 1; i <= N; ++i) {
        MultiPolynomial p = ring.one();
        for (int s = i + 1; s <= N; ++s) p = p * (ring.var_class() - fixed_point_weight(ring, s - 1));
        b.elements.push_back(ring.reduce(p));
    }
    return b;
}

/// Upsilon_H basis of the quaternionic ring: prod_{s=i+1}^{n}(eta - t_s^2).
inline ClassBasis upsilon_h_basis(const EquivariantRing& ring) {
    if (ring.kind != RingKind::QuaternionicHP) throw structural_error("Upsilon_H lives in the HP ring");
    int N = ring.rank;
    ClassBasis b;
    b.label = BasisLabel::UpsilonH;
    for (int i = 1; i <= N; ++i) {
        MultiPolynomial p = ring.one();
        for (int s = i + 1; s <= N; ++s) p = p * (ring.var_class() - ring.var_t(s - 1, 2));
        b.elements.push_back(ring.reduce(p));
    }
    return b;
}

/// Split basis of the restricted complex ring in the block order
/// {[HP^0][2],...,[HP^{n-1}][2], [HP^0],...,[HP^{n-1}]}:
/// xi * prod_{s=i+1}^{n}(xi^2 - t_s^2) followed by prod_{s=i+1}^{n}(xi^2 - t_s^2).
inline ClassBasis upsilon_prime_basis(const EquivariantRing& ring) {
    if (ring.kind != RingKind::ComplexRestricted)
        throw structural_error("Upsilon' lives in the restricted complex ring");
    int n = ring.n;
    ClassBasis b;
    b.label = BasisLabel::UpsilonPrime;
    auto tail = [&](int i) {
        MultiPolynomial p = ring.one();
        for (int s = i + 1; s <= n; ++s) p = p * (ring.var_class(2) - ring.var_t(s - 1, 2));
        return p;
    };
    for (int i = 1; i <= n; ++i) b.elements.push_back(ring.reduce(ring.var_class() * tail(i)));
    for (int i = 1; i <= n; ++i) b.elements.push_back(ring.reduce(tail(i)));
    return b;
}

/// Matrix whose column j holds the coefficients of basis element j with
/// respect to powers of the class variable (entries in C[t], embedded as
/// polynomials with class-exponent zero).
inline PolyMatrix basis_coordinate_matrix(const EquivariantRing& ring, const ClassBasis& basis) {
    int N = ring.rank;
    if (static_cast<int>(basis.elements.size()) != N) throw structural_error("basis size mismatch");
    PolyMatrix m(N, ring.zero());
    for (int j = 0; j < N; ++j)
        for (int k = 0; k < N; ++k) m.at(k, j) = basis.elements[static_cast<size_t>(j)].coefficient_of(ring.class_var, k);
    return m;
}

/// Express a reduced element in an ordered basis: solve Bmat x = coords
/// over the coefficient ring via the adjugate. Fails (structural_error)
/// when the basis does not span over the fraction field or the
/// coordinates are not polynomial.
inline std::vector<MultiPolynomial> express_in_basis(const EquivariantRing& ring,
                                                     const ClassBasis& basis,
                                                     const MultiPolynomial& x) {
    int N = ring.rank;
    PolyMatrix bmat = basis_coordinate_matrix(ring, basis);
    MultiPolynomial det = bmat.det();
    if (det.is_zero()) throw structural_error("basis does not span");
    PolyMatrix adj = bmat.adjugate();
    std::vector<MultiPolynomial> coords;
    for (int i = 0; i < N; ++i) {
        MultiPolynomial num = ring.zero();
        for (int k = 0; k < N; ++k) num = num + adj.at(i, k) * x.coefficient_of(ring.class_var, k);
        auto q = MultiPolynomial::try_divide_exact(num, det);
        if (!q) throw structural_error("element does not lie in the basis span over C[t]");
        coords.push_back(*q);
    }
    return coords;
}

/// Matrix of cup product with the class variable in the given ordered
/// basis; column j expands (class var) * b_j.
inline PolyMatrix cup_matrix(const EquivariantRing& ring, const ClassBasis& basis) {
    int N = ring.rank;
    PolyMatrix m(N, ring.zero());
    for (int j = 0; j < N; ++j) {
        MultiPolynomial image = ring.reduce(ring.var_class() * basis.elements[static_cast<size_t>(j)]);
        auto coords = express_in_basis(ring, basis, image);
        for (int i = 0; i < N; ++i) m.at(i, j) = coords[static_cast<size_t>(i)];
    }
    return m;
}

/// e^{T_2n}: upper bidiagonal with diagonal t_1..t_2n and unit
/// superdiagonal, over C[t_1..t_2n] (no class variable).
inline PolyMatrix e_T_2n_matrix(int n) {
    int nv = 2 * n;
    PolyMatrix m(2 * n, MultiPolynomial::zero(nv));
    for (int i = 0; i < 2 * n; ++i) {
        m.at(i, i) = MultiPolynomial::variable(nv, i);
        if (i + 1 < 2 * n) m.at(i, i + 1) = MultiPolynomial::one(nv);
    }
    return m;
}

/// e^T: the restriction of e^{T_2n} to t = (t_1..t_n, -t_1..-t_n), over
/// C[t_1..t_n].
inline PolyMatrix e_T_matrix(int n) {
    int nv = n;
    PolyMatrix m(2 * n, MultiPolynomial::zero(nv));
    for (int i = 0; i < 2 * n; ++i) {
        MultiPolynomial ti = MultiPolynomial::variable(nv, i % n);
        m.at(i, i) = i < n ? ti : -ti;
        if (i + 1 < 2 * n) m.at(i, i + 1) = MultiPolynomial::one(nv);
    }
    return m;
}

/// e^T_X: n x n upper bidiagonal with diagonal t_1^2..t_n^2 and unit
/// superdiagonal, over C[t_1..t_n].
inline PolyMatrix e_T_X_matrix(int n) {
    int nv = n;
    PolyMatrix m(n, MultiPolynomial::zero(nv));
    for (int i = 0; i < n; ++i) {
        m.at(i, i) = MultiPolynomial::variable(nv, i, 2);
        if (i + 1 < n) m.at(i, i + 1) = MultiPolynomial::one(nv);
    }
    return m;
}

/// Block embedding tau(C) = [[0, I], [C, 0]] for polynomial matrices.
inline PolyMatrix tau_embed_poly(const PolyMatrix& c) {
    int n = c.dim();
    PolyMatrix m(2 * n, ring_ops<MultiPolynomial>::zero_like(c.exemplar()));
    MultiPolynomial one = ring_ops<MultiPolynomial>::one_like(c.exemplar());
    for (int i = 0; i < n; ++i) {
        m.at(i, n + i) = one;
        for (int j = 0; j < n; ++j) m.at(n + i, j) = c.at(i, j);
    }
    return m;
}

/// Strip the (unused) class variable from coordinates over C[t].
inline MultiPolynomial drop_class_var(const EquivariantRing& ring, const MultiPolynomial& p) {
    if (p.degree_in(ring.class_var) > 0) throw structural_error("coefficient still involves the class variable");
    MultiPolynomial out(ring.nvars - 1);
    for (const auto& [e, c] : p.terms()) {
        Exponent small(e.begin(), e.end() - 1);
        out.add_term(small, c);
    }
    return out;
}

struct PhiResult {
    PolyMatrix phi;        // over C[t_1..t_n]
    MultiPolynomial det;   // must be a unit (+-1)
    bool identity_holds;   // e^T Phi == Phi (tau . e^T_X), checked exactly
};

/// The change-of-basis element Phi with e^T = Phi (tau . e^T_X) Phi^{-1}.
/// Column j of Phi holds the Upsilon-coordinates of the j-th Upsilon'
/// basis vector; equivalently Phi = B^{-1} D for the coordinate matrices
/// of the two bases. The defining identity is verified exactly and a
/// failure is a hard error.
inline PhiResult build_phi(int n) {
    EquivariantRing ring = make_complex_restricted_ring(n);
    ClassBasis b = upsilon_basis(ring);
    ClassBasis d = upsilon_prime_basis(ring);

    int N = 2 * n;
    PolyMatrix phi_full(N, ring.zero());
    for (int j = 0; j < N; ++j) {
        auto coords = express_in_basis(ring, b, d.elements[static_cast<size_t>(j)]);
        for (int i = 0; i < N; ++i) phi_full.at(i, j) = coords[static_cast<size_t>(i)];
    }
    PolyMatrix phi(N, MultiPolynomial::zero(n));
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) phi.at(i, j) = drop_class_var(ring, phi_full.at(i, j));

    PhiResult result{phi, phi.det(), false};
    PolyMatrix lhs = e_T_matrix(n) * phi;
    PolyMatrix rhs = phi * tau_embed_poly(e_T_X_matrix(n));
    result.identity_holds = (lhs == rhs);
    if (!result.identity_holds)
        throw verification_error("Phi conjugation identity failed");
    bool unit = result.det == MultiPolynomial::one(n) || result.det == -MultiPolynomial::one(n);
    if (!unit) throw verification_error("det Phi is not a unit");
    return result;
}

/// Grading compatibility of the torsor map: conjugating the matrix with
/// diagonal t_i^2 and superdiagonal x^4 by diag(1, x^4, ..., x^{4(n-1)})
/// recovers e^T_X(t). Checked as a polynomial identity in (t, x).
inline bool nu_equivariance_check(int n) {
    int nv = n + 1; // t_1..t_n, x
    MultiPolynomial x4 = MultiPolynomial::variable(nv, n, 4);
    PolyMatrix scaled(n, MultiPolynomial::zero(nv));
    for (int i = 0; i < n; ++i) {
        scaled.at(i, i) = MultiPolynomial::variable(nv, i, 2);
        if (i + 1 < n) scaled.at(i, i + 1) = x4;
    }
    PolyMatrix d2(n, MultiPolynomial::zero(nv));
    for (int i = 0; i < n; ++i) d2.at(i, i) = MultiPolynomial::variable(nv, n, 4 * i);
    PolyMatrix target(n, MultiPolynomial::zero(nv));
    for (int i = 0; i < n; ++i) {
        target.at(i, i) = MultiPolynomial::variable(nv, i, 2);
        if (i + 1 < n) target.at(i, i + 1) = MultiPolynomial::one(nv);
    }
    return d2 * scaled == target * d2;
}

} // namespace satake
