#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace satake {

/// Arbitrary-precision integer and rational types. Everything in this
/// library is exact; there is no floating point anywhere.
using Int = mpz_class;
using Rat = mpq_class;

/// Canonicalized rational from a numerator/denominator pair.
inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Int& z) { return z.get_str(); }

inline std::string to_string(const Rat& r) { return r.get_str(); }

inline long to_long(const Int& z) { return z.get_si(); }

/// Deterministic 64-bit generator (splitmix64). Used for all seeded
/// sampling so test runs are reproducible across platforms.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, bound).
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    /// Small rational with numerator in [-max_num, max_num] and
    /// denominator in [1, max_den].
    Rat small_rational(long max_num = 9, long max_den = 4) {
        long num = static_cast<long>(below(static_cast<std::uint64_t>(2 * max_num + 1))) - max_num;
        long den = static_cast<long>(below(static_cast<std::uint64_t>(max_den))) + 1;
        return rat(num, den);
    }

    /// Small nonzero rational.
    Rat small_nonzero_rational(long max_num = 9, long max_den = 4) {
        for (;;) {
            Rat r = small_rational(max_num, max_den);
            if (r != 0) return r;
        }
    }

    long small_int(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

  private:
    std::uint64_t state_;
};

} // namespace satake
