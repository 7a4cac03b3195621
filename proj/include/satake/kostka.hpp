#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

#include "satake/coweight.hpp"
#include "satake/errors.hpp"
#include "satake/qpolynomial.hpp"

namespace satake {

/// Kostka-Foulkes polynomials K_{lam,mu}(q), by two independent
/// algorithms: the Lascoux-Schutzenberger charge statistic on
/// semistandard tableaux, and the q-analog of Kostant's multiplicity
/// formula. The test suite asserts they agree.

/// Semistandard tableau of shape lam and content mu: rows weakly
/// increase, columns strictly increase. Entries are 1-based values.
struct SSYT {
    std::vector<std::vector<int>> rows;

    /// Reading word: rows bottom to top, each left to right.
    std::vector<int> reading_word() const {
        std::vector<int> w;
        for (auto it = rows.rbegin(); it != rows.rend(); ++it)
            for (int v : *it) w.push_back(v);
        return w;
    }
};

/// Enumerate SSYT(lam, mu) for partitions lam, mu (nonnegative, dominant).
inline std::vector<SSYT> enumerate_ssyt(const Coweight& lam, const Coweight& mu) {
    std::vector<SSYT> out;
    int n = lam.n();
    if (lam.size() != mu.size()) return out;
    std::vector<long> remaining(mu.parts.begin(), mu.parts.end());
    SSYT t;
    t.rows.assign(static_cast<size_t>(n), {});
    for (int r = 0; r < n; ++r) t.rows[static_cast<size_t>(r)].reserve(static_cast<size_t>(lam[r]));

    std::function<bool(int, int)> fill = [&](int r, int c) -> bool {
        if (r == n) {
            out.push_back(t);
            return true;
        }
        if (c == lam[r]) {
            // Skip empty rows that may follow.
            int nr = r + 1;
            return fill(nr, 0);
        }
        auto& row = t.rows[static_cast<size_t>(r)];
        int lo = 1;
        if (c > 0) lo = row[static_cast<size_t>(c - 1)];
        if (r > 0 && static_cast<int>(t.rows[static_cast<size_t>(r - 1)].size()) > c)
            lo = std::max(lo, t.rows[static_cast<size_t>(r - 1)][static_cast<size_t>(c)] + 1);
        lo = std::max(lo, r + 1); // column strictness forces entry >= row index + 1
        for (int v = lo; v <= n; ++v) {
            if (remaining[static_cast<size_t>(v - 1)] == 0) continue;
            remaining[static_cast<size_t>(v - 1)]--;
            row.push_back(v);
            fill(r, c + 1);
            row.pop_back();
            remaining[static_cast<size_t>(v - 1)]++;
        }
        return false;
    };
    fill(0, 0);
    return out;
}

/// Lascoux-Schutzenberger charge of a word whose content is a partition.
/// Standard subwords are extracted cyclically (first 1 from the left,
/// then the next 2 to its right, wrapping when needed); each extracted
/// letter r+1 gains the index of r plus one exactly when it sits to the
/// right of r.
inline long charge(std::vector<int> word) {
    long total = 0;
    while (!word.empty()) {
        int largest = *std::max_element(word.begin(), word.end());
        std::vector<size_t> chosen;
        size_t pos = 0;
        // first 1 from the left
        while (word[pos] != 1) ++pos;
        chosen.push_back(pos);
        long index = 0;
        for (int r = 2; r <= largest; ++r) {
            size_t prev = chosen.back();
            bool found = false;
            for (size_t i = prev + 1; i < word.size(); ++i) {
                if (word[i] == r) {
                    chosen.push_back(i);
                    index += 1; // found to the right
                    found = true;
                    break;
                }
            }
            if (!found) {
                for (size_t i = 0; i < prev; ++i) {
                    if (word[i] == r) {
                        chosen.push_back(i);
                        found = true;
                        break;
                    }
                }
            }
            if (!found) throw structural_error("charge: content is not a partition");
            total += index;
        }
        std::sort(chosen.begin(), chosen.end());
        std::vector<int> rest;
        rest.reserve(word.size() - chosen.size());
        size_t ci = 0;
        for (size_t i = 0; i < word.size(); ++i) {
            if (ci < chosen.size() && chosen[ci] == i) {
                ++ci;
            } else {
                rest.push_back(word[i]);
            }
        }
        word.swap(rest);
    }
    return total;
}

/// K_{lam,mu}(q) = sum over SSYT(lam,mu) of q^{charge}. Arguments are
/// dominant coweights of equal length and size; both are det-twisted to
/// partitions first (the polynomial is invariant under that shift).
inline QPolynomial kostka_foulkes_charge(const Coweight& lam, const Coweight& mu) {
    if (lam.n() != mu.n()) throw structural_error("coweight length mismatch");
    if (!is_dominant(lam) || !is_dominant(mu)) throw precondition_error("arguments must be dominant");
    if (lam.size() != mu.size()) return QPolynomial::zero();
    auto tw = det_twist_to_partitions(lam, mu);
    QPolynomial k;
    for (const auto& t : enumerate_ssyt(tw.lam, tw.mu)) {
        k.add_term(static_cast<int>(charge(t.reading_word())), 1);
    }
    return k;
}

/// q-analog of the Kostant partition function: sum over expressions of v
/// as a nonnegative combination of positive roots e_i - e_j (i < j) of
/// q^{number of roots, counted with multiplicity}.
inline QPolynomial q_partition_function(const Coweight& v) {
    int n = v.n();
    std::vector<std::pair<int, int>> roots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) roots.emplace_back(i, j);

    QPolynomial result;
    std::vector<long> rem(v.parts.begin(), v.parts.end());
    // Roots are processed in lexicographic order; with e_i - e_j for i<j,
    // once all roots touching coordinate 0..k are used up the remainder
    // there must vanish.
    std::function<void(size_t, int)> rec = [&](size_t idx, int used) {
        if (idx == roots.size()) {
            for (long r : rem)
                if (r != 0) return;
            result.add_term(used, 1);
            return;
        }
        auto [i, j] = roots[idx];
        // Max usable count of this root: adding it increments rem[j]
        // deficit; coordinate i must stay nonnegative overall. Bound by
        // what coordinate i still has plus what later roots can't fix:
        // simple bound = current rem[i] when all earlier roots into i are
        // finished; prune via partial sums.
        long maxc = rem[static_cast<size_t>(i)];
        if (maxc < 0) maxc = 0;
        for (long c = 0; c <= maxc; ++c) {
            if (c > 0) {
                rem[static_cast<size_t>(i)] -= 1;
                rem[static_cast<size_t>(j)] += 1;
            }
            // Partial-sum feasibility: remaining roots only move mass to
            // strictly larger indices, so every prefix sum must be >= 0.
            long prefix = 0;
            bool ok = true;
            for (int k = 0; k < n; ++k) {
                prefix += rem[static_cast<size_t>(k)];
                if (prefix < 0) {
                    ok = false;
                    break;
                }
            }
            if (ok && prefix == 0) rec(idx + 1, used + static_cast<int>(c));
        }
        rem[static_cast<size_t>(i)] += maxc;
        rem[static_cast<size_t>(j)] -= maxc;
    };
    long total = 0;
    for (long r : rem) total += r;
    if (total == 0) rec(0, 0);
    return result;
}

namespace detail {
inline void for_each_permutation(int n, const std::function<void(const std::vector<int>&, int)>& f) {
    std::vector<int> perm(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
    // Iterate in lexicographic order, recomputing the sign by counting
    // inversions (n <= 5 here, cost is irrelevant).
    do {
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[static_cast<size_t>(i)] > perm[static_cast<size_t>(j)]) ++inv;
        f(perm, inv % 2 == 0 ? 1 : -1);
    } while (std::next_permutation(perm.begin(), perm.end()));
}
} // namespace detail

/// Lusztig's q-analog of weight multiplicity via Kostant's formula:
/// sum_w (-1)^{l(w)} P_q(w(lam+rho) - (mu+rho)). Equals K_{lam,mu}(q).
inline QPolynomial kostka_foulkes_lusztig(const Coweight& lam, const Coweight& mu) {
    if (lam.n() != mu.n()) throw structural_error("coweight length mismatch");
    if (!is_dominant(lam) || !is_dominant(mu)) throw precondition_error("arguments must be dominant");
    if (lam.size() != mu.size()) return QPolynomial::zero();
    int n = lam.n();
    std::vector<long> rho(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) rho[static_cast<size_t>(i)] = n - 1 - i;

    QPolynomial sum;
    detail::for_each_permutation(n, [&](const std::vector<int>& w, int sign) {
        Coweight v;
        v.parts.resize(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) {
            // (w(lam+rho))_i = (lam+rho)_{w^{-1}(i)}; build by scattering.
            v.parts[static_cast<size_t>(w[static_cast<size_t>(i)])] =
                lam[i] + rho[static_cast<size_t>(i)];
        }
        for (int i = 0; i < n; ++i)
            v.parts[static_cast<size_t>(i)] -= mu[i] + rho[static_cast<size_t>(i)];
        QPolynomial p = q_partition_function(v);
        sum = sum + (sign > 0 ? p : -p);
    });
    return sum;
}

} // namespace satake
