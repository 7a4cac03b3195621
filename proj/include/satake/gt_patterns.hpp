#pragma once

#include <functional>
#include <vector>

#include "satake/coweight.hpp"
#include "satake/errors.hpp"
#include "satake/multipoly.hpp"
#include "satake/numeric.hpp"

namespace satake {

/// Gelfand-Tsetlin machinery for GL_n: weight multiplicities, dimensions
/// and characters of irreducibles, all by exact enumeration. This is the
/// oracle layer the q-analog modules are checked against.

/// Depth-first walk over all GT patterns with top row `lam` (a partition,
/// weakly decreasing nonnegative). The visitor receives the weight of the
/// pattern: mu_k = (sum of row k) - (sum of row k+1), rows counted from
/// the bottom (length-1 row) up so that row n is lam itself.
inline void for_each_gt_pattern(const Coweight& lam,
                                const std::function<void(const Coweight&)>& visit) {
    int n = lam.n();
    if (!is_dominant(lam)) throw precondition_error("GT enumeration requires a dominant top row");
    for (long p : lam.parts)
        if (p < 0) throw precondition_error("GT enumeration requires a partition (det-twist first)");

    // rows[k] has length k+1; rows[n-1] = lam.
    std::vector<std::vector<long>> rows(static_cast<size_t>(n));
    rows[static_cast<size_t>(n - 1)] = lam.parts;
    std::vector<long> row_sums(static_cast<size_t>(n), 0);
    long top_sum = lam.size();
    row_sums[static_cast<size_t>(n - 1)] = top_sum;

    std::function<void(int)> descend = [&](int level) {
        if (level < 0) {
            Coweight mu;
            mu.parts.resize(static_cast<size_t>(n));
            long below = 0;
            for (int k = 0; k < n; ++k) {
                mu.parts[static_cast<size_t>(k)] = row_sums[static_cast<size_t>(k)] - below;
                below = row_sums[static_cast<size_t>(k)];
            }
            visit(mu);
            return;
        }
        // Fill row `level` (length level+1) interlacing with row level+1.
        const auto& upper = rows[static_cast<size_t>(level + 1)];
        auto& cur = rows[static_cast<size_t>(level)];
        cur.assign(static_cast<size_t>(level + 1), 0);
        std::function<void(int, long)> fill = [&](int pos, long sum) {
            if (pos > level) {
                row_sums[static_cast<size_t>(level)] = sum;
                descend(level - 1);
                return;
            }
            long hi = upper[static_cast<size_t>(pos)];
            long lo = upper[static_cast<size_t>(pos + 1)];
            // Entries within a row must stay weakly decreasing.
            if (pos > 0) hi = std::min(hi, cur[static_cast<size_t>(pos - 1)]);
            for (long v = lo; v <= hi; ++v) {
                cur[static_cast<size_t>(pos)] = v;
                fill(pos + 1, sum + v);
            }
        };
        fill(0, 0);
    };
    descend(n - 2);
}

/// dim of the mu-weight space of V_lam, by counting GT patterns. Both
/// arguments may be arbitrary coweights; they are det-twisted together.
inline Int weight_multiplicity(const Coweight& lam, const Coweight& mu) {
    if (lam.n() != mu.n()) throw structural_error("coweight length mismatch");
    if (!is_dominant(lam)) throw precondition_error("lam must be dominant");
    if (lam.size() != mu.size()) return 0;
    auto tw = det_twist_to_partitions(lam, mu);
    Int count = 0;
    for_each_gt_pattern(tw.lam, [&](const Coweight& w) {
        if (w == tw.mu) ++count;
    });
    return count;
}

/// Weyl dimension formula: prod_{i<j} (lam_i - lam_j + j - i) / (j - i).
inline Int weyl_dimension(const Coweight& lam) {
    if (!is_dominant(lam)) throw precondition_error("lam must be dominant");
    int n = lam.n();
    Int num = 1, den = 1;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            num *= Int(lam[i] - lam[j] + j - i);
            den *= Int(j - i);
        }
    }
    return num / den;
}

/// Schur polynomial s_lam(x_1..x_n) as the GT-pattern generating sum.
/// Requires a partition; negative coweights must be det-twisted by the
/// caller, which multiplies the character by (x_1...x_n)^{-k}.
inline MultiPolynomial schur_polynomial(const Coweight& lam) {
    int n = lam.n();
    MultiPolynomial s(n);
    for_each_gt_pattern(lam, [&](const Coweight& mu) {
        Exponent e(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) e[static_cast<size_t>(i)] = static_cast<int>(mu[i]);
        s.add_term(e, Rat(1));
    });
    return s;
}

/// All weights of V_lam with multiplicities (lam a partition).
inline std::vector<std::pair<Coweight, Int>> weight_system(const Coweight& lam) {
    std::map<Coweight, Int> acc;
    for_each_gt_pattern(lam, [&](const Coweight& mu) { acc[mu] += 1; });
    return {acc.begin(), acc.end()};
}

} // namespace satake
