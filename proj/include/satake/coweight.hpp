#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "satake/errors.hpp"
#include "satake/numeric.hpp"

namespace satake {

/// Integer coweight of GL_n; entries may be negative. Dominant means
/// weakly decreasing.
struct Coweight {
    std::vector<long> parts;

    Coweight() = default;
    explicit Coweight(std::vector<long> p) : parts(std::move(p)) {}
    Coweight(std::initializer_list<long> p) : parts(p) {}

    int n() const { return static_cast<int>(parts.size()); }

    long size() const { return std::accumulate(parts.begin(), parts.end(), 0L); }

    long operator[](int i) const { return parts[static_cast<size_t>(i)]; }

    bool operator==(const Coweight& o) const { return parts == o.parts; }
    bool operator!=(const Coweight& o) const { return !(*this == o); }
    bool operator<(const Coweight& o) const { return parts < o.parts; }

    Coweight shifted(long k) const {
        Coweight r = *this;
        for (auto& p : r.parts) p += k;
        return r;
    }

    /// Dominant representative under the permutation action.
    Coweight dominant_sort() const {
        Coweight r = *this;
        std::sort(r.parts.begin(), r.parts.end(), std::greater<long>());
        return r;
    }

    std::string str() const {
        std::ostringstream out;
        out << "(";
        for (int i = 0; i < n(); ++i) {
            if (i) out << ",";
            out << parts[static_cast<size_t>(i)];
        }
        out << ")";
        return out.str();
    }
};

inline bool is_dominant(const Coweight& lam) {
    for (int i = 0; i + 1 < lam.n(); ++i)
        if (lam[i] < lam[i + 1]) return false;
    return true;
}

/// Dominance order: |mu| = |lam| and every partial sum of mu is bounded
/// by the matching partial sum of lam. Both arguments must be dominant.
inline bool dominance_leq(const Coweight& mu, const Coweight& lam) {
    if (mu.n() != lam.n()) throw structural_error("coweight length mismatch");
    if (mu.size() != lam.size()) return false;
    long pm = 0, pl = 0;
    for (int i = 0; i < mu.n(); ++i) {
        pm += mu[i];
        pl += lam[i];
        if (pm > pl) return false;
    }
    return true;
}

/// The pairing values against rho_n: stores both <lam, 2rho_n> (always an
/// integer) and <lam, rho_n> (half-integral in general).
struct RhoPairing {
    long value;     // <lam, 2rho_n>
    Rat half_value; // <lam, rho_n>
};

inline RhoPairing rho_pairing(const Coweight& lam) {
    int n = lam.n();
    long v = 0;
    for (int i = 1; i <= n; ++i) v += lam[i - 1] * (n + 1 - 2 * i);
    return RhoPairing{v, rat(v, 2)};
}

/// <lam - mu, rho_n>, an integer whenever lam - mu lies in the root lattice.
inline Rat rho_pairing_difference(const Coweight& lam, const Coweight& mu) {
    if (lam.n() != mu.n()) throw structural_error("coweight length mismatch");
    return rho_pairing(lam).half_value - rho_pairing(mu).half_value;
}

/// Minimal simultaneous determinant twist making both coweights
/// partitions (entrywise nonnegative). Kostka-Foulkes and multiplicity
/// outputs are invariant under this shift.
struct DetTwist {
    Coweight lam;
    Coweight mu;
    long k;
};

inline DetTwist det_twist_to_partitions(const Coweight& lam, const Coweight& mu) {
    if (lam.n() != mu.n()) throw structural_error("coweight length mismatch");
    long lo = 0;
    for (long p : lam.parts) lo = std::min(lo, p);
    for (long p : mu.parts) lo = std::min(lo, p);
    long k = -lo;
    return DetTwist{lam.shifted(k), mu.shifted(k), k};
}

/// All dominant coweights with nonnegative entries, given length, and
/// |lam| == total (partitions of `total` into at most n parts, padded).
inline std::vector<Coweight> partitions_of(long total, int n) {
    std::vector<Coweight> out;
    std::vector<long> cur(static_cast<size_t>(n), 0);
    std::function<void(int, long, long)> rec = [&](int pos, long remaining, long maxpart) {
        if (pos == n) {
            if (remaining == 0) out.emplace_back(cur);
            return;
        }
        long hi = std::min(remaining, maxpart);
        for (long v = hi; v >= 0; --v) {
            // Remaining parts are bounded by v, so prune when impossible.
            if (v * (n - pos) < remaining) break;
            cur[static_cast<size_t>(pos)] = v;
            rec(pos + 1, remaining - v, v);
        }
        cur[static_cast<size_t>(pos)] = 0;
    };
    rec(0, total, total);
    return out;
}

/// Dominant pairs (lam, mu) with mu <= lam in dominance order, |lam| <= size_bound.
inline std::vector<std::pair<Coweight, Coweight>> dominant_pairs(int n, long size_bound) {
    std::vector<std::pair<Coweight, Coweight>> out;
    for (long total = 0; total <= size_bound; ++total) {
        auto lams = partitions_of(total, n);
        for (const auto& lam : lams) {
            for (const auto& mu : lams) {
                if (dominance_leq(mu, lam)) out.emplace_back(lam, mu);
            }
        }
    }
    return out;
}

} // namespace satake
