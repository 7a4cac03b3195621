#pragma once

#include <map>
#include <string>
#include <vector>

#include "satake/coweight.hpp"
#include "satake/errors.hpp"
#include "satake/kostka.hpp"
#include "satake/qpolynomial.hpp"

namespace satake {

/// Poincare polynomials of IC stalks on affine Grassmannian orbit
/// closures. The complex table realizes Lusztig's formula; the
/// quaternionic and symmetric tables carry the identical q-polynomials
/// with every degree placement quadrupled, concentrated in degrees
/// divisible by 4 after the 4<lam,rho_n> shift.

enum class StalkFlavor { Complex, Quaternionic, Symmetric };

inline std::string flavor_name(StalkFlavor f) {
    switch (f) {
        case StalkFlavor::Complex: return "complex";
        case StalkFlavor::Quaternionic: return "quaternionic";
        case StalkFlavor::Symmetric: return "symmetric";
    }
    return "?";
}

/// Stalk polynomial at a point of the mu-stratum inside the closure of
/// the lam-orbit: q^{<lam-mu,rho_n>} K_{lam,mu}(q^{-1}). Zero when mu is
/// not <= lam (the stalk sits off the closure). Coefficient of q^i is a
/// stalk dimension; the degree placement depends on the flavor.
inline QPolynomial complex_stalk_poly(const Coweight& lam, const Coweight& mu) {
    if (lam.n() != mu.n()) throw structural_error("coweight length mismatch");
    if (!is_dominant(lam) || !is_dominant(mu)) throw precondition_error("arguments must be dominant");
    if (!dominance_leq(mu, lam)) return QPolynomial::zero();
    QPolynomial k = kostka_foulkes_charge(lam, mu);
    Rat shift = rho_pairing_difference(lam, mu);
    if (shift.get_den() != 1)
        throw verification_error("<lam-mu,rho> must be integral on the root lattice");
    return k.reciprocal_shift(static_cast<int>(shift.get_num().get_si()));
}

/// Cohomological degree of the q^i coefficient.
inline long stalk_degree(StalkFlavor flavor, const Coweight& lam, int i) {
    long two_rho = rho_pairing(lam).value; // <lam, 2rho_n>
    if (flavor == StalkFlavor::Complex) return 2L * i - two_rho;
    return 4L * i - 2L * two_rho; // 4i - 4<lam,rho_n>
}

/// Real dimension of the lam-orbit: 2<lam,2rho_n> for the complex
/// Grassmannian (twice the complex dimension) and 8<lam,rho_n> =
/// 2<lam,rho_2n> for the quaternionic/symmetric one.
inline long orbit_real_dimension(const Coweight& lam, StalkFlavor flavor) {
    if (!is_dominant(lam)) throw precondition_error("lam must be dominant");
    long two_rho = rho_pairing(lam).value;
    if (flavor == StalkFlavor::Complex) return 2 * two_rho;
    return 4 * two_rho;
}

struct StalkRow {
    Coweight lam;
    Coweight mu;
    QPolynomial poly;              // stalk dimensions as coefficients of q^i
    std::map<long, Int> by_degree; // cohomological degree -> dimension
    long orbit_dim = 0;
};

struct StalkTable {
    int n = 0;
    StalkFlavor flavor = StalkFlavor::Complex;
    std::vector<StalkRow> rows;
};

inline StalkRow make_stalk_row(StalkFlavor flavor, const Coweight& lam, const Coweight& mu) {
    StalkRow row;
    row.lam = lam;
    row.mu = mu;
    row.poly = complex_stalk_poly(lam, mu);
    for (const auto& [i, c] : row.poly.terms()) row.by_degree[stalk_degree(flavor, lam, i)] = c;
    row.orbit_dim = orbit_real_dimension(lam, flavor);
    return row;
}

/// Full table over dominant pairs mu <= lam with |lam| <= size_bound.
/// The symmetric flavor produces the identical table to the quaternionic
/// one; both carry the same q-polynomials as the complex table.
inline StalkTable stalk_table(StalkFlavor flavor, int n, long size_bound) {
    StalkTable table;
    table.n = n;
    table.flavor = flavor;
    for (const auto& [lam, mu] : dominant_pairs(n, size_bound))
        table.rows.push_back(make_stalk_row(flavor, lam, mu));
    return table;
}

/// Parity vanishing: every populated degree satisfies the flavor's
/// congruence after the dimension shift.
inline bool parity_ok(const StalkRow& row, StalkFlavor flavor) {
    long two_rho = rho_pairing(row.lam).value;
    for (const auto& [deg, dim] : row.by_degree) {
        if (dim <= 0) return false;
        if (flavor == StalkFlavor::Complex) {
            if ((deg + two_rho) % 2 != 0) return false;
        } else {
            long shifted = deg + 2 * two_rho; // deg + 4<lam,rho_n>
            if (shifted % 4 != 0) return false;
        }
    }
    return true;
}

} // namespace satake
