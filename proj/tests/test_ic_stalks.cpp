#include <catch2/catch_amalgamated.hpp>

#include "satake/ic_stalks.hpp"
#include "satake/verify.hpp"

using namespace satake;

TEST_CASE("complex stalk polynomials") {
    CHECK(complex_stalk_poly(Coweight{2, 0}, Coweight{2, 0}) == QPolynomial::one());
    // K_{(2,0),(1,1)} = q, <lam-mu,rho> = 1: q * q^{-1} = 1.
    CHECK(complex_stalk_poly(Coweight{2, 0}, Coweight{1, 1}) == QPolynomial::one());
    // K_{(2,1,0),(1,1,1)} = q + q^2, shift 2: 1 + q.
    CHECK(complex_stalk_poly(Coweight{2, 1, 0}, Coweight{1, 1, 1}).str() == "1 + q");
    // mu not <= lam: off the closure.
    CHECK(complex_stalk_poly(Coweight{1, 1}, Coweight{2, 0}).is_zero());
}

TEST_CASE("degree placement") {
    // Complex: coefficient of q^i sits in degree 2i - <lam,2rho>.
    Coweight lam{2, 0};
    CHECK(stalk_degree(StalkFlavor::Complex, lam, 0) == -2);
    CHECK(stalk_degree(StalkFlavor::Complex, lam, 1) == 0);
    // Quaternionic: 4i - 4<lam,rho> = 4i - 2<lam,2rho>.
    CHECK(stalk_degree(StalkFlavor::Quaternionic, lam, 0) == -4);
    CHECK(stalk_degree(StalkFlavor::Quaternionic, lam, 1) == 0);
}

TEST_CASE("quaternionic stalk row for the subregular point") {
    StalkRow row = make_stalk_row(StalkFlavor::Quaternionic, Coweight{2, 0}, Coweight{1, 1});
    REQUIRE(row.by_degree.size() == 1);
    CHECK(row.by_degree.count(-4) == 1);
    CHECK(row.by_degree.at(-4) == 1);
    CHECK(row.poly == QPolynomial::one());
}

TEST_CASE("orbit dimensions") {
    CHECK(orbit_real_dimension(Coweight{0, 0}, StalkFlavor::Quaternionic) == 0);
    // HP^1 is real-4-dimensional.
    CHECK(orbit_real_dimension(Coweight{1, 0}, StalkFlavor::Quaternionic) == 4);
    // P^1 is real-2-dimensional.
    CHECK(orbit_real_dimension(Coweight{1, 0}, StalkFlavor::Complex) == 2);
    for (const auto& lam : partitions_of(5, 3))
        CHECK(orbit_real_dimension(lam, StalkFlavor::Quaternionic) % 4 == 0);
}

TEST_CASE("diagonal rows are one-dimensional in the expected degree") {
    for (const auto& lam : partitions_of(4, 2)) {
        StalkRow row = make_stalk_row(StalkFlavor::Quaternionic, lam, lam);
        REQUIRE(row.by_degree.size() == 1);
        long deg = row.by_degree.begin()->first;
        CHECK(deg == -2 * rho_pairing(lam).value); // -4<lam,rho_n>
        CHECK(row.by_degree.begin()->second == 1);
    }
}

TEST_CASE("flavors carry identical polynomials with quadrupled degrees") {
    StalkTable c = stalk_table(StalkFlavor::Complex, 2, 4);
    StalkTable q = stalk_table(StalkFlavor::Quaternionic, 2, 4);
    StalkTable s = stalk_table(StalkFlavor::Symmetric, 2, 4);
    REQUIRE(c.rows.size() == q.rows.size());
    for (size_t i = 0; i < c.rows.size(); ++i) {
        CHECK(c.rows[i].poly == q.rows[i].poly);
        CHECK(q.rows[i].by_degree == s.rows[i].by_degree);
        CHECK(parity_ok(c.rows[i], StalkFlavor::Complex));
        CHECK(parity_ok(q.rows[i], StalkFlavor::Quaternionic));
    }
}

TEST_CASE("stalk table suite at verification scale") {
    Check result = check_stalk_tables(3, 4);
    INFO(result.detail);
    CHECK(result.pass);
}
