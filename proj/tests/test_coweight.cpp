#include <catch2/catch_amalgamated.hpp>

#include "satake/coweight.hpp"

using namespace satake;

TEST_CASE("dominance predicate") {
    CHECK(is_dominant(Coweight{2, 1, 0}));
    CHECK_FALSE(is_dominant(Coweight{1, 2}));
    CHECK(is_dominant(Coweight{0, 0, 0}));
    CHECK(is_dominant(Coweight{3, -1}));
}

TEST_CASE("dominance order on GL_2") {
    CHECK(dominance_leq(Coweight{1, 1}, Coweight{2, 0}));
    CHECK_FALSE(dominance_leq(Coweight{2, 0}, Coweight{1, 1}));
    CHECK(dominance_leq(Coweight{2, 0}, Coweight{2, 0}));
    CHECK_THROWS_AS(dominance_leq(Coweight{1}, Coweight{1, 0}), structural_error);
}

TEST_CASE("dominance order is a partial order") {
    auto all = partitions_of(4, 3);
    for (const auto& a : all) {
        CHECK(dominance_leq(a, a));
        for (const auto& b : all) {
            if (dominance_leq(a, b) && dominance_leq(b, a)) CHECK(a == b);
            for (const auto& c : all) {
                if (dominance_leq(a, b) && dominance_leq(b, c)) CHECK(dominance_leq(a, c));
            }
        }
    }
}

TEST_CASE("rho pairings") {
    // n=2, lam=(2,0): <lam,2rho_2> = 2, <lam,rho_2> = 1
    auto p = rho_pairing(Coweight{2, 0});
    CHECK(p.value == 2);
    CHECK(p.half_value == Rat(1));
    auto c = rho_pairing(Coweight{1, 1});
    CHECK(c.value == 0);
    CHECK(c.half_value == 0);
    auto z = rho_pairing(Coweight{0, 0, 0});
    CHECK(z.value == 0);
}

TEST_CASE("rho pairing difference is a nonnegative integer under dominance") {
    for (int n = 2; n <= 3; ++n) {
        for (long total = 0; total <= 5; ++total) {
            auto lams = partitions_of(total, n);
            for (const auto& lam : lams)
                for (const auto& mu : lams) {
                    if (!dominance_leq(mu, lam)) continue;
                    Rat d = rho_pairing_difference(lam, mu);
                    CHECK(d.get_den() == 1);
                    CHECK(d >= 0);
                }
        }
    }
}

TEST_CASE("pairing difference integrality only needs equal sizes") {
    // lam - mu in the root lattice iff sums agree; the half-pairing
    // difference is an integer there even without dominance.
    Coweight lam{3, -1};
    Coweight mu{1, 1};
    Rat d = rho_pairing_difference(lam, mu);
    CHECK(d.get_den() == 1);
}

TEST_CASE("det twist normalization") {
    auto tw = det_twist_to_partitions(Coweight{1, -2}, Coweight{0, -1});
    CHECK(tw.k == 2);
    CHECK(tw.lam == Coweight{3, 0});
    CHECK(tw.mu == Coweight{2, 1});
    // Already nonnegative: untouched.
    auto id = det_twist_to_partitions(Coweight{2, 0}, Coweight{1, 1});
    CHECK(id.k == 0);
}

TEST_CASE("partition enumeration") {
    CHECK(partitions_of(0, 2).size() == 1);
    CHECK(partitions_of(3, 2).size() == 2);  // (3,0), (2,1)
    CHECK(partitions_of(4, 3).size() == 4);  // 4,31,22,211
    for (const auto& p : partitions_of(6, 3)) {
        CHECK(is_dominant(p));
        CHECK(p.size() == 6);
    }
}
