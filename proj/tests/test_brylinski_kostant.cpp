#include <catch2/catch_amalgamated.hpp>

#include "satake/brylinski_kostant.hpp"
#include "satake/kostka.hpp"

using namespace satake;

TEST_CASE("standard representation of GL_2") {
    WeightedRep rep = build_irrep(Coweight{1, 0});
    CHECK(rep.dimension() == 2);
    CHECK(rank(rep.e_matrix) == 1);
    CHECK(rep.weight_dim(Coweight{1, 0}) == 1);
    CHECK(rep.weight_dim(Coweight{0, 1}) == 1);
}

TEST_CASE("symmetric square of GL_2") {
    WeightedRep rep = build_irrep(Coweight{2, 0});
    CHECK(rep.dimension() == 3);
    CHECK(rep.weight_dim(Coweight{2, 0}) == 1);
    CHECK(rep.weight_dim(Coweight{1, 1}) == 1);
    CHECK(rep.weight_dim(Coweight{0, 2}) == 1);
}

TEST_CASE("exterior square of GL_3") {
    WeightedRep rep = build_irrep(Coweight{1, 1, 0});
    CHECK(rep.dimension() == 3);
    for (const auto& [mu, mult] : weight_system(Coweight{1, 1, 0}))
        CHECK(rep.weight_dim(mu) == mult);
}

TEST_CASE("weight spaces match the GT oracle") {
    for (int n = 2; n <= 3; ++n) {
        for (long total = 0; total <= 4; ++total) {
            for (const auto& lam : partitions_of(total, n)) {
                WeightedRep rep = build_irrep(lam);
                CHECK(Int(rep.dimension()) == weyl_dimension(lam));
                for (const auto& [mu, mult] : weight_system(lam)) {
                    INFO("lam=" << lam.str() << " mu=" << mu.str());
                    CHECK(rep.weight_dim(mu) == mult);
                }
            }
        }
    }
}

TEST_CASE("e_n raises weights by simple roots") {
    WeightedRep rep = build_irrep(Coweight{2, 1, 0});
    int d = rep.dimension();
    for (int j = 0; j < d; ++j) {
        Coweight source = rep.basis_weights[static_cast<size_t>(j)];
        for (int i = 0; i < d; ++i) {
            if (rep.e_matrix.at(i, j) == 0) continue;
            Coweight target = rep.basis_weights[static_cast<size_t>(i)];
            // target = source + alpha_k for some simple root alpha_k.
            long diff_sum = 0;
            bool simple = false;
            for (int k = 0; k + 1 < 3; ++k) {
                Coweight alpha;
                alpha.parts.assign(3, 0);
                alpha.parts[static_cast<size_t>(k)] = 1;
                alpha.parts[static_cast<size_t>(k + 1)] = -1;
                Coweight moved = source;
                for (int t = 0; t < 3; ++t) moved.parts[static_cast<size_t>(t)] += alpha[t];
                if (moved == target) simple = true;
            }
            (void)diff_sum;
            CHECK(simple);
        }
    }
}

TEST_CASE("filtration polynomial reference values") {
    WeightedRep rep2 = build_irrep(Coweight{2, 0});
    CHECK(bk_polynomial(rep2, Coweight{1, 1}).str() == "q");
    CHECK(bk_polynomial(rep2, Coweight{2, 0}) == QPolynomial::one());
    WeightedRep rep3 = build_irrep(Coweight{2, 1, 0});
    CHECK(bk_polynomial(rep3, Coweight{1, 1, 1}).str() == "q + q^2");
    CHECK(bk_polynomial(rep3, Coweight{5, 0, 0}).is_zero()); // not a weight
}

TEST_CASE("highest weight vector is killed by e_n") {
    for (const auto& lam : partitions_of(3, 3)) {
        WeightedRep rep = build_irrep(lam);
        CHECK(bk_polynomial(rep, lam) == QPolynomial::one());
    }
}

TEST_CASE("main identity against both Kostka-Foulkes algorithms") {
    for (int n = 2; n <= 3; ++n) {
        for (long total = 0; total <= 4; ++total) {
            auto lams = partitions_of(total, n);
            for (const auto& lam : lams) {
                WeightedRep rep = build_irrep(lam);
                for (const auto& mu : lams) {
                    INFO("lam=" << lam.str() << " mu=" << mu.str());
                    CHECK(bk_polynomial(rep, mu) == kostka_foulkes_charge(lam, mu));
                }
            }
        }
    }
}

TEST_CASE("filtration dims weakly increase and exhaust") {
    WeightedRep rep = build_irrep(Coweight{3, 1, 0});
    for (const auto& [mu, idxs] : rep.weight_spaces) {
        auto dims = bk_filtration_dims(rep, mu);
        REQUIRE_FALSE(dims.empty());
        for (size_t i = 1; i < dims.size(); ++i) CHECK(dims[i] >= dims[i - 1]);
        CHECK(dims.back() == static_cast<int>(idxs.size()));
    }
}

TEST_CASE("dimension guard") {
    CHECK_THROWS_AS(build_irrep(Coweight{12, 6, 0}, Int(100)), precondition_error);
}

TEST_CASE("negative coweights are det-twisted") {
    WeightedRep rep = build_irrep(Coweight{1, -1});
    CHECK(rep.dimension() == 3); // adjoint-like rep of GL_2
    CHECK(bk_polynomial(rep, Coweight{0, 0}).str() == "q");
}
