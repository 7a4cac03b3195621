#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "satake/coweight.hpp"
#include "satake/errors.hpp"
#include "satake/gt_patterns.hpp"
#include "satake/linalg.hpp"
#include "satake/matrix.hpp"
#include "satake/qpolynomial.hpp"

namespace satake {

/// Explicit exact model of the irreducible V_lam inside the |lam|-fold
/// tensor power of the standard representation, realized over Q. The
/// module exists to compute Brylinski-Kostant filtrations
/// F_i V = ker(e_n^{i+1}) by honest kernel computations, independently of
/// any combinatorial formula.

namespace tensor_detail {

/// Sparse vector in (Q^n)^{tensor d}; keys encode the tensor word in base n.
using SparseVec = std::map<std::uint64_t, Rat>;

inline std::uint64_t word_set(std::uint64_t word, int slot, int letter, int n) {
    std::uint64_t p = 1;
    for (int k = 0; k < slot; ++k) p *= static_cast<std::uint64_t>(n);
    std::uint64_t old = (word / p) % static_cast<std::uint64_t>(n);
    return word + (static_cast<std::uint64_t>(letter) - old) * p;
}

inline int word_get(std::uint64_t word, int slot, int n) {
    std::uint64_t p = 1;
    for (int k = 0; k < slot; ++k) p *= static_cast<std::uint64_t>(n);
    return static_cast<int>((word / p) % static_cast<std::uint64_t>(n));
}

/// Apply the elementary matrix E_{ab} (e_b -> e_a) slotwise.
inline SparseVec apply_elementary(const SparseVec& v, int a, int b, int n, int d) {
    SparseVec out;
    for (const auto& [word, c] : v) {
        for (int slot = 0; slot < d; ++slot) {
            if (word_get(word, slot, n) != b) continue;
            std::uint64_t w = word_set(word, slot, a, n);
            auto [it, inserted] = out.try_emplace(w, c);
            if (!inserted) {
                it->second += c;
                if (it->second == 0) out.erase(it);
            }
        }
    }
    return out;
}

inline Coweight word_weight(std::uint64_t word, int n, int d) {
    Coweight mu;
    mu.parts.assign(static_cast<size_t>(n), 0);
    for (int slot = 0; slot < d; ++slot) mu.parts[static_cast<size_t>(word_get(word, slot, n))]++;
    return mu;
}

} // namespace tensor_detail

struct WeightedRep {
    int n = 0;
    int tensor_degree = 0;
    long det_twist = 0; // lam was shifted by this before building
    std::vector<tensor_detail::SparseVec> basis;
    std::vector<Coweight> basis_weights;      // weight of each basis vector
    std::map<Coweight, std::vector<int>> weight_spaces;
    RationalMatrix e_matrix{1, Rat(0)};       // principal nilpotent e_n = sum E_{i,i+1}

    int dimension() const { return static_cast<int>(basis.size()); }

    Int weight_dim(const Coweight& mu) const {
        auto it = weight_spaces.find(mu);
        return it == weight_spaces.end() ? Int(0) : Int(it->second.size());
    }
};

/// Build V_lam: start from the Young-symmetrized highest-weight vector
/// (column antisymmetrizations of e_1 ⊗ ... ⊗ e_h), close under the
/// lowering operators E_{i+1,i}, and row-reduce into an echelon basis.
/// Weight spaces never mix under reduction because distinct weights have
/// disjoint tensor-word support.
inline WeightedRep build_irrep(const Coweight& lam_in, Int dim_bound = 3000) {
    using namespace tensor_detail;
    if (!is_dominant(lam_in)) throw precondition_error("build_irrep requires a dominant coweight");
    long k = 0;
    for (long p : lam_in.parts) k = std::min(k, p);
    Coweight lam = lam_in.shifted(-k);

    Int dim = weyl_dimension(lam);
    if (dim > dim_bound) throw precondition_error("representation dimension exceeds bound");

    WeightedRep rep;
    rep.n = lam.n();
    rep.det_twist = -k;
    int n = rep.n;
    int d = static_cast<int>(lam.size());
    rep.tensor_degree = d;

    // Highest-weight vector: product over columns of the Young diagram of
    // antisymmetrized e_1 ⊗ ... ⊗ e_h (h = column height), laid out in
    // column-major slots.
    std::vector<int> col_heights;
    long max_part = lam.n() > 0 ? lam[0] : 0;
    for (long c = 0; c < max_part; ++c) {
        int h = 0;
        for (int r = 0; r < n; ++r)
            if (lam[r] > c) ++h;
        col_heights.push_back(h);
    }
    SparseVec hw;
    hw[0] = 1; // empty tensor (d may be zero for lam = 0)
    int slot_base = 0;
    for (int h : col_heights) {
        SparseVec column;
        std::vector<int> perm(static_cast<size_t>(h));
        for (int i = 0; i < h; ++i) perm[static_cast<size_t>(i)] = i;
        do {
            int inv = 0;
            for (int i = 0; i < h; ++i)
                for (int j = i + 1; j < h; ++j)
                    if (perm[static_cast<size_t>(i)] > perm[static_cast<size_t>(j)]) ++inv;
            std::uint64_t word = 0;
            std::uint64_t p = 1;
            for (int s = 0; s < slot_base; ++s) p *= static_cast<std::uint64_t>(n);
            for (int s = 0; s < h; ++s) {
                word += static_cast<std::uint64_t>(perm[static_cast<size_t>(s)]) * p;
                p *= static_cast<std::uint64_t>(n);
            }
            column[word] = (inv % 2 == 0) ? Rat(1) : Rat(-1);
        } while (std::next_permutation(perm.begin(), perm.end()));
        SparseVec next;
        for (const auto& [w1, c1] : hw)
            for (const auto& [w2, c2] : column) {
                next[w1 + w2] += c1 * c2;
            }
        hw.swap(next);
        slot_base += h;
    }

    // Echelon closure under lowering operators.
    std::map<std::uint64_t, int> pivot_to_index;
    std::vector<SparseVec> echelon;

    auto reduce = [&](SparseVec v) -> SparseVec {
        while (!v.empty()) {
            auto lead = v.begin(); // smallest word as pivot
            auto it = pivot_to_index.find(lead->first);
            if (it == pivot_to_index.end()) break;
            const SparseVec& e = echelon[static_cast<size_t>(it->second)];
            Rat f = lead->second; // e has pivot coefficient 1
            for (const auto& [w, c] : e) {
                auto [slot, inserted] = v.try_emplace(w, 0);
                slot->second -= f * c;
                if (slot->second == 0) v.erase(slot);
                (void)inserted;
            }
        }
        return v;
    };

    std::vector<int> frontier;
    auto insert_vec = [&](SparseVec v) -> int {
        v = reduce(std::move(v));
        if (v.empty()) return -1;
        Rat lead = v.begin()->second;
        for (auto& [w, c] : v) c /= lead;
        int idx = static_cast<int>(echelon.size());
        pivot_to_index[v.begin()->first] = idx;
        echelon.push_back(std::move(v));
        return idx;
    };

    int first = insert_vec(hw);
    if (first >= 0) frontier.push_back(first);
    while (!frontier.empty()) {
        std::vector<int> next_frontier;
        for (int idx : frontier) {
            SparseVec current = echelon[static_cast<size_t>(idx)];
            for (int i = 0; i + 1 < n; ++i) {
                SparseVec lowered = apply_elementary(current, i + 1, i, n, d); // E_{i+1,i}
                int ni = insert_vec(std::move(lowered));
                if (ni >= 0) next_frontier.push_back(ni);
            }
        }
        frontier.swap(next_frontier);
    }

    rep.basis = echelon;
    for (const auto& v : rep.basis) {
        Coweight mu = word_weight(v.begin()->first, n, d);
        rep.basis_weights.push_back(mu);
        rep.weight_spaces[mu].push_back(static_cast<int>(rep.basis_weights.size()) - 1);
    }
    if (Int(rep.dimension()) != dim)
        throw verification_error("irrep closure dimension disagrees with Weyl dimension");

    // Matrix of e_n = sum_i E_{i,i+1} in the echelon basis. Coordinates
    // are read off by elimination against the echelon vectors.
    int D = rep.dimension();
    RationalMatrix e(D, Rat(0));
    for (int j = 0; j < D; ++j) {
        SparseVec image;
        for (int i = 0; i + 1 < n; ++i) {
            SparseVec part = apply_elementary(rep.basis[static_cast<size_t>(j)], i, i + 1, n, d);
            for (const auto& [w, c] : part) {
                image[w] += c;
                if (image[w] == 0) image.erase(w);
            }
        }
        while (!image.empty()) {
            auto lead = image.begin();
            auto it = pivot_to_index.find(lead->first);
            if (it == pivot_to_index.end())
                throw verification_error("e_n image left the representation span");
            int bi = it->second;
            Rat f = lead->second;
            e.at(bi, j) = f;
            for (const auto& [w, c] : echelon[static_cast<size_t>(bi)]) {
                image[w] -= f * c;
                if (image[w] == 0) image.erase(w);
            }
        }
    }
    rep.e_matrix = e;
    return rep;
}

/// dim F_i V(mu) for i = 0, 1, ... until it stabilizes at dim V(mu).
inline std::vector<int> bk_filtration_dims(const WeightedRep& rep, const Coweight& mu_in) {
    Coweight mu = mu_in.shifted(rep.det_twist);
    auto it = rep.weight_spaces.find(mu);
    if (it == rep.weight_spaces.end()) return {};
    const auto& cols = it->second;
    int wdim = static_cast<int>(cols.size());
    int D = rep.dimension();

    std::vector<int> dims;
    RationalMatrix p = rep.e_matrix; // e^{i+1} for current i
    for (int i = 0;; ++i) {
        QMat sub(D, wdim);
        for (int r = 0; r < D; ++r)
            for (int c = 0; c < wdim; ++c) sub.at(r, c) = p.at(r, cols[static_cast<size_t>(c)]);
        int ker = wdim - rank(std::move(sub));
        dims.push_back(ker);
        if (ker == wdim) break;
        p = p * rep.e_matrix;
    }
    return dims;
}

/// P_mu(V, q) = sum_i dim(F_i V(mu) / F_{i-1} V(mu)) q^i. Returns the zero
/// polynomial when mu is not a weight of the representation.
inline QPolynomial bk_polynomial(const WeightedRep& rep, const Coweight& mu) {
    auto dims = bk_filtration_dims(rep, mu);
    QPolynomial p;
    int prev = 0;
    for (size_t i = 0; i < dims.size(); ++i) {
        p.add_term(static_cast<int>(i), Int(dims[i] - prev));
        prev = dims[i];
    }
    return p;
}

} // namespace satake
