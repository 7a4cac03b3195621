#include <catch2/catch_amalgamated.hpp>

#include "satake/spectral.hpp"
#include "satake/verify.hpp"

using namespace satake;

TEST_CASE("shear reindexing") {
    BigradedSeries s;
    s.add(2, -2, 3);
    s.add(2, 2, 4);
    s.add(2, 0, 5);
    BigradedSeries sheared = shear(s);
    CHECK(sheared.at(4, -2) == 3);
    CHECK(sheared.at(0, 2) == 4);
    CHECK(sheared.at(2, 0) == 5);
    CHECK(sheared.total_dimension() == s.total_dimension());
    CHECK(unshear(sheared) == s);
}

TEST_CASE("shear of a weight-zero series is the identity") {
    BigradedSeries s;
    s.add(1, 0, 2);
    s.add(-3, 0, 7);
    CHECK(shear(s) == s);
}

TEST_CASE("shear rejects odd weights") {
    BigradedSeries s;
    s.add(0, 1, 1);
    CHECK_THROWS_AS(shear(s), precondition_error);
}

TEST_CASE("shear preserves dimension on random series") {
    SplitMix64 rng(51);
    for (int trial = 0; trial < 20; ++trial) {
        BigradedSeries s;
        int entries = 1 + static_cast<int>(rng.below(6));
        for (int e = 0; e < entries; ++e)
            s.add(rng.small_int(-4, 4), 2 * rng.small_int(-2, 2), Int(1 + rng.below(5)));
        BigradedSeries sheared = shear(s);
        CHECK(sheared.total_dimension() == s.total_dimension());
        CHECK(unshear(sheared) == s);
    }
}

TEST_CASE("shift example generator degrees") {
    for (int n = 1; n <= 3; ++n) {
        BigradedSeries sheared = shear(sym_g2n_generator_series(n));
        Int nn = Int(n) * n;
        CHECK(sheared.at(0, 2) == nn);   // dual of C
        CHECK(sheared.at(2, 0) == 2 * nn); // duals of A and D
        CHECK(sheared.at(4, -2) == nn);  // dual of B
    }
}

TEST_CASE("branching of the standard representation") {
    // n=1: GL_2 standard -> V_(1) at j=1 and j=-1.
    auto dec = branch_psi_x(Coweight{1, 0});
    REQUIRE(dec.terms.size() == 2);
    for (const auto& t : dec.terms) {
        CHECK(t.lam == Coweight{1});
        CHECK(t.mult == 1);
        CHECK((t.j == 1 || t.j == -1));
    }
    CHECK(dec.total_dimension() == 2);
}

TEST_CASE("branching of determinants") {
    // det of GL_2 -> square of det of GL_1 at j=0.
    auto dec = branch_psi_x(Coweight{1, 1});
    REQUIRE(dec.terms.size() == 1);
    CHECK(dec.terms[0].lam == Coweight{2});
    CHECK(dec.terms[0].j == 0);
    CHECK(dec.terms[0].mult == 1);
    // det of GL_4 -> (det_2)^{(x)2} at j=0.
    auto dec4 = branch_psi_x(Coweight{1, 1, 1, 1});
    REQUIRE(dec4.terms.size() == 1);
    CHECK(dec4.terms[0].lam == Coweight{2, 2});
    CHECK(dec4.terms[0].j == 0);
}

TEST_CASE("branching respects dimensions and parity") {
    for (int n = 1; n <= 2; ++n) {
        for (long total = 0; total <= 4; ++total) {
            for (const auto& Lam : partitions_of(total, 2 * n)) {
                auto dec = branch_psi_x(Lam);
                CHECK(dec.total_dimension() == weyl_dimension(Lam));
                long parity = Lam.size() % 2;
                for (const auto& t : dec.terms) {
                    CHECK(((t.j % 2) + 2) % 2 == parity);
                    CHECK(t.mult > 0);
                    CHECK(is_dominant(t.lam));
                }
            }
        }
    }
}

TEST_CASE("branching symmetry under j -> -j for twist-self-dual weights") {
    // Lam = (1,0,...,0,-1): the multiset of (lam, j) is j-symmetric.
    for (int n = 1; n <= 2; ++n) {
        Coweight Lam;
        Lam.parts.assign(static_cast<size_t>(2 * n), 0);
        Lam.parts.front() = 1;
        Lam.parts.back() = -1;
        auto dec = branch_psi_x(Lam);
        std::map<std::pair<Coweight, int>, Int> mults;
        for (const auto& t : dec.terms) mults[{t.lam, t.j}] += t.mult;
        for (const auto& [key, m] : mults) {
            auto mirrored = mults.find({key.first, -key.second});
            REQUIRE(mirrored != mults.end());
            CHECK(mirrored->second == m);
        }
    }
}

TEST_CASE("free module image for the unit and the standard rep") {
    auto unit = phi_on_free_module(Coweight{0, 0});
    REQUIRE(unit.summands.size() == 1);
    CHECK(unit.summands[0].lam == Coweight{0});
    CHECK(unit.summands[0].j == 0);
    CHECK(unit.summands[0].mult == 1);
    CHECK(unit.hilbert_identity);

    auto std1 = phi_on_free_module(Coweight{1, 0});
    CHECK(std1.summands.size() == 2);
    CHECK(std1.hilbert_identity);
    // Graded dimensions: z + z^{-1} on both routes.
    CHECK(std1.input_series == std1.output_series);
    CHECK(std1.input_series.coeff(1) == 1);
    CHECK(std1.input_series.coeff(-1) == 1);
}

TEST_CASE("Hilbert-series identity sweep") {
    for (int n = 1; n <= 2; ++n) {
        for (long total = 0; total <= 4; ++total) {
            for (const auto& Lam : partitions_of(total, 2 * n)) {
                auto img = phi_on_free_module(Lam);
                INFO("Lam=" << Lam.str());
                CHECK(img.hilbert_identity);
            }
        }
    }
}

TEST_CASE("full spectral suite") {
    Check result = check_spectral_suite(2, 4);
    INFO(result.detail);
    CHECK(result.pass);
}
