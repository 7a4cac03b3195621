#include <catch2/catch_amalgamated.hpp>

#include "satake/gt_patterns.hpp"

using namespace satake;

TEST_CASE("weight multiplicities from GT patterns") {
    CHECK(weight_multiplicity(Coweight{2, 0}, Coweight{1, 1}) == 1);
    CHECK(weight_multiplicity(Coweight{2, 1, 0}, Coweight{1, 1, 1}) == 2);
    CHECK(weight_multiplicity(Coweight{3, 1, 0}, Coweight{3, 1, 0}) == 1);
    CHECK(weight_multiplicity(Coweight{2, 0}, Coweight{2, 1}) == 0); // size mismatch
}

TEST_CASE("Weyl dimension formula") {
    CHECK(weyl_dimension(Coweight{1, 0}) == 2);
    CHECK(weyl_dimension(Coweight{2, 1, 0}) == 8);
    CHECK(weyl_dimension(Coweight{3, 3, 3}) == 1);
    CHECK(weyl_dimension(Coweight{5, 5}) == 1);
}

TEST_CASE("dimension equals the sum of weight multiplicities") {
    for (int n = 2; n <= 4; ++n) {
        long bound = n == 4 ? 4 : 6;
        for (long total = 0; total <= bound; ++total) {
            for (const auto& lam : partitions_of(total, n)) {
                Int sum = 0;
                for (const auto& [mu, mult] : weight_system(lam)) sum += mult;
                CHECK(sum == weyl_dimension(lam));
            }
        }
    }
}

TEST_CASE("weight multiplicities are Weyl invariant") {
    Coweight lam{3, 1, 0};
    for (const auto& [mu, mult] : weight_system(lam)) {
        CHECK(weight_multiplicity(lam, mu.dominant_sort()) == mult);
    }
}

TEST_CASE("Schur polynomials") {
    // n=2: s_(1,0) = x1 + x2, s_(1,1) = x1 x2, s_(2,0) = x1^2 + x1 x2 + x2^2
    MultiPolynomial x1 = MultiPolynomial::variable(2, 0);
    MultiPolynomial x2 = MultiPolynomial::variable(2, 1);
    CHECK(schur_polynomial(Coweight{1, 0}) == x1 + x2);
    CHECK(schur_polynomial(Coweight{1, 1}) == x1 * x2);
    CHECK(schur_polynomial(Coweight{2, 0}) == x1 * x1 + x1 * x2 + x2 * x2);
}

TEST_CASE("characters are symmetric with Weyl-dimension specialization") {
    for (const auto& lam : partitions_of(4, 3)) {
        MultiPolynomial s = schur_polynomial(lam);
        // Symmetry under swapping the first two variables.
        MultiPolynomial swapped(3);
        for (const auto& [e, c] : s.terms()) {
            Exponent f = {e[1], e[0], e[2]};
            swapped.add_term(f, c);
        }
        CHECK(s == swapped);
        CHECK(s.evaluate({Rat(1), Rat(1), Rat(1)}) == Rat(weyl_dimension(lam)));
        // Coefficient of x^mu is the weight multiplicity.
        for (const auto& [mu, mult] : weight_system(lam)) {
            Exponent e(3);
            for (int i = 0; i < 3; ++i) e[static_cast<size_t>(i)] = static_cast<int>(mu[i]);
            auto it = s.terms().find(e);
            REQUIRE(it != s.terms().end());
            CHECK(it->second == Rat(mult));
        }
    }
}

TEST_CASE("negative coweights twist to partitions") {
    // V_{(0,-1)} = dual of the standard rep: dimension 2.
    CHECK(weyl_dimension(Coweight{0, -1}) == 2);
    CHECK(weight_multiplicity(Coweight{0, -1}, Coweight{-1, 0}) == 1);
}
