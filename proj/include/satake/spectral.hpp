#pragma once

#include <map>
#include <utility>
#include <vector>

#include "satake/coweight.hpp"
#include "satake/errors.hpp"
#include "satake/gt_patterns.hpp"
#include "satake/qpolynomial.hpp"

namespace satake {

/// Decategorified spectral side: the shearing regrading of bigraded
/// algebras/modules, branching of GL_2n representations along the
/// embedding of GL_n x G_m through the diagonal times the 2rho_L
/// cocharacter, and the free-module image of the composite functor.

/// Finitely supported table (cohomological degree i, G_m-weight j) -> dim.
struct BigradedSeries {
    std::map<std::pair<int, int>, Int> entries;

    void add(int i, int j, const Int& dim) {
        if (dim == 0) return;
        auto key = std::make_pair(i, j);
        auto [it, inserted] = entries.try_emplace(key, dim);
        if (!inserted) {
            it->second += dim;
            if (it->second == 0) entries.erase(it);
        }
    }

    Int at(int i, int j) const {
        auto it = entries.find({i, j});
        return it == entries.end() ? Int(0) : it->second;
    }

    Int total_dimension() const {
        Int t = 0;
        for (const auto& [k, v] : entries) t += v;
        return t;
    }

    bool operator==(const BigradedSeries& o) const { return entries == o.entries; }
};

/// Shearing: output entry at (i, j) is the input entry at (i+j, j).
/// Requires all populated G_m-weights to be even; dimension-preserving
/// and inverted by the opposite reindexing.
inline BigradedSeries shear(const BigradedSeries& series) {
    BigradedSeries out;
    for (const auto& [key, dim] : series.entries) {
        auto [i, j] = key;
        if (j % 2 != 0) throw precondition_error("shear requires even G_m-weights");
        if (dim < 0) throw precondition_error("dimensions must be nonnegative");
        out.add(i - j, j, dim); // lands at (i', j) with i' + j = i
    }
    return out;
}

inline BigradedSeries unshear(const BigradedSeries& series) {
    BigradedSeries out;
    for (const auto& [key, dim] : series.entries) {
        auto [i, j] = key;
        if (j % 2 != 0) throw precondition_error("unshear requires even G_m-weights");
        out.add(i + j, j, dim);
    }
    return out;
}

/// Generators of Sym(g_2n[-2]) as a bigraded space: coordinate functions
/// in degree 2 with G_m-weights -2 (B block), +2 (C block) and 0 (A, D),
/// n^2 of each block.
inline BigradedSeries sym_g2n_generator_series(int n) {
    BigradedSeries s;
    s.add(2, -2, Int(n) * n);
    s.add(2, 2, Int(n) * n);
    s.add(2, 0, 2 * Int(n) * n);
    return s;
}

struct BranchingTerm {
    Coweight lam; // dominant GL_n coweight
    int j;        // G_m-weight / cohomological shift parameter
    Int mult;
};

struct BranchingDecomposition {
    Coweight Lam; // the GL_2n input
    std::vector<BranchingTerm> terms;

    Int total_dimension() const {
        Int t = 0;
        for (const auto& term : terms) t += term.mult * weyl_dimension(term.lam);
        return t;
    }
};

/// Restrict V_Lam along psi_X: substitute (x_1 h, ..., x_n h,
/// x_1 h^{-1}, ..., x_n h^{-1}) into the character and expand each
/// h-weight in Schur polynomials by iterated leading-term subtraction.
/// A negative multiplicity during subtraction is a hard error.
inline BranchingDecomposition branch_psi_x(const Coweight& Lam_in) {
    if (Lam_in.n() % 2 != 0) throw structural_error("branch_psi_x needs a GL_2n coweight");
    if (!is_dominant(Lam_in)) throw precondition_error("Lam must be dominant");
    int n = Lam_in.n() / 2;

    // Normalize to a partition; the determinant twist k on GL_2n becomes
    // a twist by 2k on each GL_n output and leaves j unchanged.
    long k = 0;
    for (long p : Lam_in.parts) k = std::min(k, p);
    Coweight Lam = Lam_in.shifted(-k);

    // Collect the restricted character: j = sum of first n entries minus
    // sum of the last n, x-weight = entrywise sum of the two halves.
    std::map<int, std::map<Coweight, Int>> by_j;
    for_each_gt_pattern(Lam, [&](const Coweight& mu) {
        long j = 0;
        Coweight x;
        x.parts.assign(static_cast<size_t>(n), 0);
        for (int i = 0; i < n; ++i) {
            j += mu[i] - mu[n + i];
            x.parts[static_cast<size_t>(i)] = mu[i] + mu[n + i];
        }
        by_j[static_cast<int>(j)][x] += 1;
    });

    BranchingDecomposition dec;
    dec.Lam = Lam_in;
    for (auto& [j, weights] : by_j) {
        // Iterated subtraction of weight systems of irreducibles, largest
        // leading weight first.
        while (!weights.empty()) {
            // Leading weight: maximal in the stored order restricted to
            // dominant candidates; the lexicographically largest weight of
            // a finite GL_n weight system is dominant.
            auto lead = std::prev(weights.end());
            Coweight lam = lead->first;
            Int mult = lead->second;
            if (!is_dominant(lam))
                throw verification_error("leading weight of a character must be dominant");
            if (mult < 0) throw verification_error("negative multiplicity in Schur expansion");
            for (const auto& [w, m] : weight_system(lam)) {
                Int& slot = weights[w];
                slot -= mult * m;
                if (slot == 0) weights.erase(w);
                else if (slot < 0) throw verification_error("negative multiplicity in Schur expansion");
            }
            dec.terms.push_back(BranchingTerm{lam.shifted(2 * k), j, mult});
        }
    }
    return dec;
}

/// Diagonal restriction multiplicities (h = 1): independent cross-check
/// that sum_j m_{lam,j} matches the plain character substitution.
inline std::map<Coweight, Int> diagonal_branching(const Coweight& Lam_in) {
    auto dec = branch_psi_x(Lam_in);
    std::map<Coweight, Int> acc;
    for (const auto& t : dec.terms) acc[t.lam] += t.mult;
    return acc;
}

/// One-variable graded dimension (Laurent polynomial in z) of a weight
/// system under a cocharacter grading: sum_mu dim(mu) z^{<mu, c>}.
inline QPolynomial principal_graded_character(const Coweight& lam_in) {
    // <mu, 2rho_N> grading for the GL_N weight system of V_lam.
    long k = 0;
    for (long p : lam_in.parts) k = std::min(k, p);
    Coweight lam = lam_in.shifted(-k);
    int N = lam.n();
    QPolynomial out;
    for_each_gt_pattern(lam, [&](const Coweight& mu) {
        long deg = 0;
        for (int i = 1; i <= N; ++i) deg += (mu[i - 1] + k) * (N + 1 - 2 * i);
        out.add_term(static_cast<int>(deg), 1);
    });
    return out;
}

/// 4rho_n-graded character of a GL_n irreducible: sum_nu dim(nu) z^{<nu,4rho_n>}.
inline QPolynomial quaternionic_graded_character(const Coweight& lam_in) {
    long k = 0;
    for (long p : lam_in.parts) k = std::min(k, p);
    Coweight lam = lam_in.shifted(-k);
    int n = lam.n();
    QPolynomial out;
    for_each_gt_pattern(lam, [&](const Coweight& nu) {
        long deg = 0;
        for (int i = 1; i <= n; ++i) deg += 2 * (nu[i - 1] + k) * (n + 1 - 2 * i);
        out.add_term(static_cast<int>(deg), 1);
    });
    return out;
}

struct FreeModuleImage {
    std::vector<BranchingTerm> summands; // (lam, shift j, multiplicity)
    QPolynomial input_series;            // generator degrees, 2rho_2n grading
    QPolynomial output_series;           // generator degrees, 4rho_n + shift grading
    bool hilbert_identity;               // the two agree
};

/// Image of the free module Sym(g_2n[-2]) (x) V_Lam under the composite
/// functor, as a sum of Sym(g_n[-4]) (x) V_lam[-j]. The summands come
/// from branch_psi_x; the Hilbert-series identity pins the grading
/// normalization: the 2rho_2n-graded dimension of the generator space
/// equals the shifted 4rho_n-graded dimension of the output generators
/// (the Sym factors match separately, with all g_n generators in
/// degree 4).
inline FreeModuleImage phi_on_free_module(const Coweight& Lam) {
    FreeModuleImage img;
    auto dec = branch_psi_x(Lam);
    img.summands = dec.terms;
    img.input_series = principal_graded_character(Lam);
    QPolynomial out;
    for (const auto& t : dec.terms) {
        QPolynomial shifted;
        for (const auto& [e, c] : quaternionic_graded_character(t.lam).terms())
            shifted.add_term(e + t.j, c * t.mult);
        out = out + shifted;
    }
    img.output_series = out;
    img.hilbert_identity = (img.input_series == img.output_series);
    return img;
}

} // namespace satake
