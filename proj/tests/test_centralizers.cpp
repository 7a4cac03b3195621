#include <catch2/catch_amalgamated.hpp>

#include "satake/centralizers.hpp"
#include "satake/verify.hpp"

using namespace satake;

TEST_CASE("Kostant section small cases") {
    auto k1 = kostant_section<Rat>({Rat(5)});
    CHECK(k1.at(0, 0) == Rat(-5));
    auto k2 = kostant_section<Rat>({Rat(3), Rat(7)}); // x^2 + 3x + 7
    CHECK(k2.at(0, 0) == 0);
    CHECK(k2.at(0, 1) == 1);
    CHECK(k2.at(1, 0) == Rat(-7));
    CHECK(k2.at(1, 1) == Rat(-3));
    auto monic = char_poly_monic(k2);
    CHECK(monic == std::vector<Rat>{Rat(1), Rat(3), Rat(7)});
}

TEST_CASE("companion matrices reproduce their characteristic polynomials") {
    SplitMix64 rng(99);
    for (int s = 1; s <= 6; ++s) {
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<Rat> c;
            for (int i = 0; i < s; ++i) c.push_back(rng.small_rational());
            auto monic = char_poly_monic(kostant_section(c));
            for (int i = 0; i < s; ++i) CHECK(monic[static_cast<size_t>(i + 1)] == c[static_cast<size_t>(i)]);
        }
    }
}

TEST_CASE("tau doubles the characteristic polynomial variable") {
    // n=1: char poly of tau([c]) is x^2 - c.
    RationalMatrix c1(1, Rat(4));
    auto monic = char_poly_monic(tau_embed(c1));
    CHECK(monic == std::vector<Rat>{Rat(1), Rat(0), Rat(-4)});
    // n=2 with char poly x^2 + c1 x + c2 -> x^4 + c1 x^2 + c2.
    auto k2 = kostant_section<Rat>({Rat(3), Rat(7)});
    auto monic4 = char_poly_monic(tau_embed(k2));
    CHECK(monic4 == std::vector<Rat>{Rat(1), Rat(0), Rat(3), Rat(0), Rat(7)});
    // C = 0 -> x^{2n}.
    RationalMatrix z(2, Rat(0));
    auto monicz = char_poly_monic(tau_embed(z));
    CHECK(monicz == std::vector<Rat>{Rat(1), Rat(0), Rat(0), Rat(0), Rat(0)});
}

TEST_CASE("interleaved characteristic polynomial identity, symbolic") {
    Check result = check_interleave_identity(3);
    INFO(result.detail);
    CHECK(result.pass);
}

TEST_CASE("companion conjugation identity") {
    // n=1 reduces to the tau embedding itself (P = identity).
    CHECK(companion_conjugation_check<Rat>({Rat(9)}));
    // Symbolic n=1,2.
    for (int n = 1; n <= 2; ++n) {
        std::vector<MultiPolynomial> c;
        for (int i = 0; i < n; ++i) c.push_back(MultiPolynomial::variable(n, i));
        CHECK(companion_conjugation_check(c));
    }
    // Sampled n=3..5.
    SplitMix64 rng(3);
    for (int n = 3; n <= 5; ++n) {
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<Rat> c;
            for (int i = 0; i < n; ++i) c.push_back(rng.small_rational());
            CHECK(companion_conjugation_check(c));
        }
    }
}

TEST_CASE("unshuffle permutation is a permutation matrix") {
    for (int n = 1; n <= 4; ++n) {
        auto p = unshuffle_permutation<Rat>(n, Rat(0));
        CHECK(p * p.transpose() == RationalMatrix::identity(2 * n, Rat(0)));
    }
}

TEST_CASE("regularity") {
    SplitMix64 rng(21);
    // Companion matrices are regular, even with repeated eigenvalues.
    CHECK(is_regular(kostant_section<Rat>({Rat(0), Rat(0)}))); // x^2: nilpotent Jordan block
    CHECK(is_regular(kostant_section<Rat>({Rat(-2), Rat(1)}))); // (x-1)^2
    // Scalars are not regular for s >= 2.
    RationalMatrix scalar = RationalMatrix::identity(3, Rat(0)).scaled(Rat(2));
    CHECK_FALSE(is_regular(scalar));
    // Regular semisimple diagonal is regular.
    RationalMatrix diag = RationalMatrix::zeros(3, Rat(0));
    diag.at(0, 0) = 1;
    diag.at(1, 1) = 2;
    diag.at(2, 2) = 3;
    CHECK(is_regular(diag));
    // tau preserves and reflects regularity.
    for (int n = 1; n <= 3; ++n) {
        for (int trial = 0; trial < 25; ++trial) {
            RationalMatrix c = random_rational_matrix(rng, n);
            CHECK(is_regular(c) == is_regular(tau_embed(c)));
        }
        if (n >= 2) {
            RationalMatrix s = RationalMatrix::identity(n, Rat(0)).scaled(Rat(5));
            CHECK(is_regular(s) == is_regular(tau_embed(s)));
        }
    }
}

TEST_CASE("centralizer basis of a regular element") {
    auto kappa = kostant_section<Rat>({Rat(1), Rat(2), Rat(3)});
    auto basis = centralizer_basis(kappa);
    REQUIRE(basis.size() == 3);
    for (const auto& x : basis) {
        CHECK(x * kappa == kappa * x);
        for (const auto& y : basis) CHECK(x * y == y * x);
    }
}

TEST_CASE("centralizer embedding") {
    SplitMix64 rng(37);
    RationalMatrix c = random_rational_matrix(rng, 2);
    RationalMatrix id = RationalMatrix::identity(2, Rat(0));
    CHECK(centralizer_embedding(id, c) == RationalMatrix::identity(4, Rat(0)));
    // g = p(C) invertible commutes; image commutes with tau(C).
    RationalMatrix g = id + c.scaled(rat(1, 2));
    if (g.det() != 0) {
        RationalMatrix e = centralizer_embedding(g, c);
        RationalMatrix tc = tau_embed(c);
        CHECK(e * tc == tc * e);
    }
    // Non-commuting input is rejected.
    RationalMatrix bad(2, Rat(0));
    bad.at(0, 1) = 1;
    RationalMatrix cc(2, Rat(0));
    cc.at(1, 0) = 1;
    cc.at(0, 0) = 1;
    if (bad * cc != cc * bad) CHECK_THROWS_AS(centralizer_embedding(bad, cc), precondition_error);
}

TEST_CASE("moment map image") {
    SplitMix64 rng(41);
    RationalMatrix c = random_rational_matrix(rng, 2);
    RationalMatrix id = RationalMatrix::identity(4, Rat(0));
    CHECK(moment_map_image(id, c) == tau_embed(c));
    auto base = char_poly_monic(tau_embed(c));
    for (int trial = 0; trial < 10; ++trial) {
        RationalMatrix x = random_invertible_matrix(rng, 4);
        auto monic = char_poly_monic(moment_map_image(x, c));
        CHECK(monic == base);
        // Only even-degree terms: odd coefficients vanish.
        CHECK(monic[1] == 0);
        CHECK(monic[3] == 0);
    }
    RationalMatrix singular(4, Rat(0));
    CHECK_THROWS_AS(moment_map_image(singular, c), singular_matrix_error);
}

TEST_CASE("shalika normal form") {
    // n=1: A=[a], C=[c] -> [c + a^2].
    RationalMatrix a(1, Rat(3)), c(1, Rat(5));
    auto res = shalika_normal_form(a, c);
    CHECK(res.verified);
    CHECK(res.normal_form.at(0, 0) == Rat(14));
    // A = 0 -> C.
    SplitMix64 rng(43);
    RationalMatrix c2 = random_rational_matrix(rng, 3);
    auto res2 = shalika_normal_form(RationalMatrix::zeros(3, Rat(0)), c2);
    CHECK(res2.verified);
    CHECK(res2.normal_form == c2);
    // Full symbolic + sampled suite.
    Check suite = check_shalika(2, 40, 17);
    INFO(suite.detail);
    CHECK(suite.pass);
}

TEST_CASE("centralizer suite") {
    Check result = check_centralizer_suite(3, 40, 7);
    INFO(result.detail);
    CHECK(result.pass);
}
