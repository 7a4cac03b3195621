#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "satake/brylinski_kostant.hpp"
#include "satake/centralizers.hpp"
#include "satake/coweight.hpp"
#include "satake/equivariant.hpp"
#include "satake/gt_patterns.hpp"
#include "satake/ic_stalks.hpp"
#include "satake/kostka.hpp"
#include "satake/parallel.hpp"
#include "satake/spectral.hpp"

namespace satake {

/// Verification suites behind `satake-kit verify` and the acceptance
/// runner. Each check is exact; a failing check carries a description of
/// the first offending case.

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

inline Check make_check(const std::string& name, bool pass, const std::string& detail = "") {
    return Check{name, pass, detail};
}

// ---------------------------------------------------------------- kostka

/// Charge and Lusztig algorithms agree, and q=1 recovers the GT weight
/// multiplicity, over all dominant pairs for the given (n, size) ranges.
inline Check check_kostka_oracles(const std::vector<std::pair<int, long>>& ranges) {
    std::ostringstream bad;
    bool ok = true;
    long cases = 0;
    for (auto [n, size_bound] : ranges) {
        auto pairs = dominant_pairs(n, size_bound);
        std::function<std::string(const std::pair<Coweight, Coweight>&)> worker =
            [](const std::pair<Coweight, Coweight>& pr) -> std::string {
            const auto& [lam, mu] = pr;
            QPolynomial a = kostka_foulkes_charge(lam, mu);
            QPolynomial b = kostka_foulkes_lusztig(lam, mu);
            if (a != b)
                return "charge/Lusztig mismatch at lam=" + lam.str() + " mu=" + mu.str() + ": " +
                       a.str() + " vs " + b.str();
            if (a.at_one() != weight_multiplicity(lam, mu))
                return "q=1 mismatch at lam=" + lam.str() + " mu=" + mu.str();
            if (!a.all_coeffs_nonnegative())
                return "negative coefficient at lam=" + lam.str() + " mu=" + mu.str();
            return "";
        };
        auto results = parallel_transform(pairs, worker);
        cases += static_cast<long>(pairs.size());
        for (const auto& r : results) {
            if (!r.empty()) {
                ok = false;
                bad << r << "; ";
                break;
            }
        }
    }
    return make_check("kostka-oracle-equivalence",
                      ok,
                      ok ? std::to_string(cases) + " dominant pairs agree" : bad.str());
}

inline Check check_kostka_vanishing(int n, long size_bound) {
    for (long total = 0; total <= size_bound; ++total) {
        auto lams = partitions_of(total, n);
        for (const auto& lam : lams) {
            for (const auto& mu : lams) {
                QPolynomial k = kostka_foulkes_charge(lam, mu);
                if (!dominance_leq(mu, lam) && !k.is_zero())
                    return make_check("kostka-vanishing", false,
                                      "nonzero K at non-dominated pair " + lam.str() + "," + mu.str());
                if (mu == lam && !(k == QPolynomial::one()))
                    return make_check("kostka-vanishing", false, "K_{lam,lam} != 1 at " + lam.str());
            }
        }
    }
    return make_check("kostka-vanishing", true, "vanishing and diagonal normalization hold");
}

// ------------------------------------------------------ brylinski-kostant

inline Check check_bk_identity(const std::vector<std::pair<int, long>>& ranges) {
    for (auto [n, size_bound] : ranges) {
        for (long total = 0; total <= size_bound; ++total) {
            for (const auto& lam : partitions_of(total, n)) {
                WeightedRep rep = build_irrep(lam);
                for (const auto& mu : partitions_of(total, n)) {
                    QPolynomial bk = bk_polynomial(rep, mu);
                    QPolynomial kf = kostka_foulkes_charge(lam, mu);
                    if (bk != kf)
                        return make_check("bk-equals-kostka", false,
                                          "mismatch at lam=" + lam.str() + " mu=" + mu.str() +
                                              ": " + bk.str() + " vs " + kf.str());
                    if (bk.at_one() != weight_multiplicity(lam, mu))
                        return make_check("bk-equals-kostka", false,
                                          "P(1) != multiplicity at lam=" + lam.str() +
                                              " mu=" + mu.str());
                }
            }
        }
    }
    return make_check("bk-equals-kostka", true, "filtration polynomial equals Kostka-Foulkes");
}

inline Check check_bk_filtration_monotone(int n, long size_bound) {
    for (long total = 0; total <= size_bound; ++total) {
        for (const auto& lam : partitions_of(total, n)) {
            WeightedRep rep = build_irrep(lam);
            Int total_dim = 0;
            for (const auto& [mu, idxs] : rep.weight_spaces) {
                auto dims = bk_filtration_dims(rep, mu);
                for (size_t i = 1; i < dims.size(); ++i) {
                    if (dims[i] < dims[i - 1])
                        return make_check("bk-filtration-monotone", false,
                                          "filtration not increasing at " + lam.str());
                }
                if (dims.empty() || Int(dims.back()) != Int(idxs.size()))
                    return make_check("bk-filtration-monotone", false,
                                      "filtration not exhaustive at " + lam.str());
                total_dim += Int(idxs.size());
            }
            if (total_dim != weyl_dimension(lam))
                return make_check("bk-filtration-monotone", false,
                                  "weight dims do not sum to Weyl dimension at " + lam.str());
        }
    }
    return make_check("bk-filtration-monotone", true, "filtrations increase and exhaust");
}

// ---------------------------------------------------------------- stalks

inline Check check_stalk_tables(int n_max, long size_bound) {
    for (int n = 1; n <= n_max; ++n) {
        StalkTable complex_table = stalk_table(StalkFlavor::Complex, n, size_bound);
        StalkTable quat = stalk_table(StalkFlavor::Quaternionic, n, size_bound);
        StalkTable sym = stalk_table(StalkFlavor::Symmetric, n, size_bound);
        if (quat.rows.size() != complex_table.rows.size() || sym.rows.size() != quat.rows.size())
            return make_check("stalk-tables", false, "row count mismatch");
        for (size_t r = 0; r < quat.rows.size(); ++r) {
            const auto& c = complex_table.rows[r];
            const auto& q = quat.rows[r];
            const auto& s = sym.rows[r];
            if (!(q.poly == c.poly) || !(s.poly == q.poly))
                return make_check("stalk-tables", false,
                                  "flavor polynomials differ at lam=" + q.lam.str() +
                                      " mu=" + q.mu.str());
            if (s.by_degree != q.by_degree)
                return make_check("stalk-tables", false, "symmetric table differs from quaternionic");
            if (!parity_ok(q, StalkFlavor::Quaternionic) || !parity_ok(s, StalkFlavor::Symmetric))
                return make_check("stalk-tables", false,
                                  "mod-4 parity fails at lam=" + q.lam.str() + " mu=" + q.mu.str());
            if (!parity_ok(c, StalkFlavor::Complex))
                return make_check("stalk-tables", false,
                                  "mod-2 parity fails at lam=" + c.lam.str() + " mu=" + c.mu.str());
            if (q.lam == q.mu && !(q.poly == QPolynomial::one()))
                return make_check("stalk-tables", false, "diagonal stalk is not 1 at " + q.lam.str());
            // Support bound: degree <= <lam-mu, rho>, strict off-diagonal.
            Rat bound = rho_pairing_difference(q.lam, q.mu);
            if (!q.poly.is_zero()) {
                Rat deg(q.poly.degree());
                if (deg > bound || (q.lam != q.mu && deg == bound))
                    return make_check("stalk-tables", false,
                                      "support bound violated at lam=" + q.lam.str() +
                                          " mu=" + q.mu.str());
            }
            if (q.poly.coeff(0) != 1)
                return make_check("stalk-tables", false,
                                  "generic stalk not 1-dimensional at lam=" + q.lam.str());
            if (q.orbit_dim % 4 != 0)
                return make_check("stalk-tables", false,
                                  "quaternionic orbit dimension not divisible by 4");
            if (q.orbit_dim != 2 * c.orbit_dim)
                return make_check("stalk-tables", false,
                                  "quaternionic orbit dimension is not the doubled complex one");
        }
    }
    return make_check("stalk-tables", true, "doubled-degree tables verified");
}

// --------------------------------------------------------------- twistor

inline Check check_twistor_suite(int n_max) {
    for (int n = 1; n <= n_max; ++n) {
        EquivariantRing full = make_complex_full_ring(n);
        EquivariantRing res = make_complex_restricted_ring(n);
        EquivariantRing hp = make_quaternionic_ring(n);

        // Relation maps to relation and f^*(eta) = xi^2.
        if (!twistor_pullback(hp, res, hp.relation).is_zero())
            return make_check("twistor-suite", false, "relation does not map to zero (n=" + std::to_string(n) + ")");
        if (twistor_pullback(hp, res, hp.var_class()) != res.reduce(res.var_class(2)))
            return make_check("twistor-suite", false, "f^*(eta) != xi^2");
        if (twistor_pullback(hp, res, hp.one()) != res.one())
            return make_check("twistor-suite", false, "f^*(1) != 1");

        // Localization images.
        auto loc_eta = localization_map(hp, hp.var_class());
        for (int i = 0; i < n; ++i)
            if (loc_eta[static_cast<size_t>(i)] != hp.var_t(i, 2))
                return make_check("twistor-suite", false, "Loc(eta) != (t_1^2..t_n^2)");
        auto loc_xi2 = localization_map(res, res.var_class(2));
        for (int i = 0; i < 2 * n; ++i)
            if (loc_xi2[static_cast<size_t>(i)] != res.var_t(i % n, 2))
                return make_check("twistor-suite", false, "Loc(xi^2) mismatch in restricted ring");
        auto loc_one = localization_map(hp, hp.one());
        for (const auto& v : loc_one)
            if (v != hp.one()) return make_check("twistor-suite", false, "Loc(1) != 1");

        // Localization injectivity: basis images, viewed as a matrix over
        // C[t], have nonzero determinant.
        {
            ClassBasis bh = upsilon_h_basis(hp);
            PolyMatrix locmat(n, hp.zero());
            for (int j = 0; j < n; ++j) {
                auto imgs = localization_map(hp, bh.elements[static_cast<size_t>(j)]);
                for (int i = 0; i < n; ++i) locmat.at(i, j) = imgs[static_cast<size_t>(i)];
            }
            if (locmat.det().is_zero())
                return make_check("twistor-suite", false, "localization not injective on HP ring");
        }

        // Cup matrices match the displayed presentations exactly.
        {
            PolyMatrix cup_full = cup_matrix(full, upsilon_basis(full));
            PolyMatrix e = e_T_2n_matrix(n);
            PolyMatrix expected(2 * n, full.zero());
            for (int i = 0; i < 2 * n; ++i)
                for (int j = 0; j < 2 * n; ++j) expected.at(i, j) = e.at(i, j).extend_vars(full.nvars);
            if (cup_full != expected)
                return make_check("twistor-suite", false, "cup matrix in Upsilon basis != e^{T_2n}");
        }
        {
            PolyMatrix cup_res = cup_matrix(res, upsilon_basis(res));
            PolyMatrix expected(2 * n, res.zero());
            PolyMatrix e = e_T_matrix(n);
            for (int i = 0; i < 2 * n; ++i)
                for (int j = 0; j < 2 * n; ++j) expected.at(i, j) = e.at(i, j).extend_vars(res.nvars);
            if (cup_res != expected)
                return make_check("twistor-suite", false, "cup matrix in restricted Upsilon basis != e^T");
        }
        {
            PolyMatrix cup_prime = cup_matrix(res, upsilon_prime_basis(res));
            PolyMatrix ex = e_T_X_matrix(n);
            PolyMatrix ex_lift(n, res.zero());
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) ex_lift.at(i, j) = ex.at(i, j).extend_vars(res.nvars);
            PolyMatrix expected = tau_embed_poly(ex_lift);
            if (cup_prime != expected)
                return make_check("twistor-suite", false,
                                  "cup matrix in Upsilon' basis != block form of e^T_X");
        }
        {
            PolyMatrix cup_h = cup_matrix(hp, upsilon_h_basis(hp));
            PolyMatrix ex = e_T_X_matrix(n);
            PolyMatrix expected(n, hp.zero());
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) expected.at(i, j) = ex.at(i, j).extend_vars(hp.nvars);
            if (cup_h != expected)
                return make_check("twistor-suite", false, "cup matrix in Upsilon_H basis != e^T_X");
        }

        // Twistor splitting: xi^2 acts on the even and odd xi-submodules
        // as e^T_X in the pulled-back Upsilon_H bases.
        {
            ClassBasis bh = upsilon_h_basis(hp);
            for (int parity = 0; parity < 2; ++parity) {
                ClassBasis part;
                part.label = BasisLabel::UpsilonH;
                std::vector<MultiPolynomial> pulled;
                for (const auto& el : bh.elements) {
                    MultiPolynomial p = twistor_pullback(hp, res, el);
                    if (parity == 1) p = res.reduce(p * res.var_class());
                    pulled.push_back(p);
                }
                // Express xi^2 * basis in the basis of the free submodule of
                // rank n: coordinates with respect to class-degrees of fixed
                // parity.
                PolyMatrix bmat(n, res.zero());
                for (int j = 0; j < n; ++j)
                    for (int kdeg = 0; kdeg < n; ++kdeg)
                        bmat.at(kdeg, j) =
                            pulled[static_cast<size_t>(j)].coefficient_of(res.class_var, 2 * kdeg + parity);
                MultiPolynomial det = bmat.det();
                if (det.is_zero())
                    return make_check("twistor-suite", false, "split submodule basis is degenerate");
                PolyMatrix adj = bmat.adjugate();
                PolyMatrix action(n, res.zero());
                for (int j = 0; j < n; ++j) {
                    MultiPolynomial img = res.reduce(pulled[static_cast<size_t>(j)] * res.var_class(2));
                    for (int i = 0; i < n; ++i) {
                        MultiPolynomial num = res.zero();
                        for (int kdeg = 0; kdeg < n; ++kdeg)
                            num = num + adj.at(i, kdeg) * img.coefficient_of(res.class_var, 2 * kdeg + parity);
                        auto qq = MultiPolynomial::try_divide_exact(num, det);
                        if (!qq)
                            return make_check("twistor-suite", false, "xi^2 action leaves the split submodule");
                        action.at(i, j) = *qq;
                    }
                }
                PolyMatrix ex = e_T_X_matrix(n);
                PolyMatrix expected(n, res.zero());
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) expected.at(i, j) = ex.at(i, j).extend_vars(res.nvars);
                if (action != expected)
                    return make_check("twistor-suite", false, "xi^2 does not act as e^T_X on the split module");
            }
        }

        // Characteristic polynomials of both cup matrices equal prod(x^2 - t_i^2).
        {
            MultiPolynomial cp1 = poly_char_poly(e_T_matrix(n));
            MultiPolynomial cp2 = poly_char_poly(tau_embed_poly(e_T_X_matrix(n)));
            int nv = n + 1;
            MultiPolynomial expected = MultiPolynomial::one(nv);
            for (int i = 0; i < n; ++i) {
                MultiPolynomial x2 = MultiPolynomial::variable(nv, n, 2);
                expected = expected * (x2 - MultiPolynomial::variable(nv, i, 2));
            }
            if (cp1 != expected || cp2 != expected)
                return make_check("twistor-suite", false, "char poly != prod(x^2 - t_i^2)");
        }
        if (!nu_equivariance_check(n))
            return make_check("twistor-suite", false, "torsor-map grading identity failed");
    }
    return make_check("twistor-suite", true, "rings, localization, cup matrices, splitting verified");
}

inline Check check_phi(int n_max) {
    for (int n = 1; n <= n_max; ++n) {
        try {
            PhiResult phi = build_phi(n);
            if (!phi.identity_holds)
                return make_check("phi-conjugation", false, "identity fails at n=" + std::to_string(n));
        } catch (const std::exception& e) {
            return make_check("phi-conjugation", false,
                              "n=" + std::to_string(n) + ": " + e.what());
        }
    }
    return make_check("phi-conjugation", true,
                      "e^T = Phi (tau . e^T_X) Phi^{-1} exactly, det Phi = +-1");
}

// --------------------------------------------------------------- kostant

inline Check check_companion_identity(int symbolic_max, const std::vector<int>& sampled_n,
                                      int samples, std::uint64_t seed) {
    for (int n = 1; n <= symbolic_max; ++n) {
        std::vector<MultiPolynomial> c;
        for (int i = 0; i < n; ++i) c.push_back(MultiPolynomial::variable(n, i));
        if (!companion_conjugation_check(c))
            return make_check("companion-identity", false, "symbolic failure at n=" + std::to_string(n));
    }
    SplitMix64 rng(seed);
    for (int n : sampled_n) {
        for (int s = 0; s < samples; ++s) {
            std::vector<Rat> c;
            for (int i = 0; i < n; ++i) c.push_back(rng.small_rational());
            if (!companion_conjugation_check(c))
                return make_check("companion-identity", false,
                                  "sampled failure at n=" + std::to_string(n));
        }
    }
    // Kostant section reproduces its characteristic polynomial.
    for (int s = 1; s <= 6; ++s) {
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<Rat> c;
            for (int i = 0; i < s; ++i) c.push_back(rng.small_rational());
            auto monic = char_poly_monic(kostant_section(c));
            for (int i = 0; i < s; ++i)
                if (monic[static_cast<size_t>(i + 1)] != c[static_cast<size_t>(i)])
                    return make_check("companion-identity", false,
                                      "char poly of kappa_s does not reproduce c");
        }
    }
    return make_check("companion-identity", true, "Kostant/companion identity verified");
}

inline Check check_interleave_identity(int symbolic_max) {
    for (int n = 1; n <= symbolic_max; ++n) {
        int nv = n * n;
        PolyMatrix c(n, MultiPolynomial::zero(nv));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) c.at(i, j) = MultiPolynomial::variable(nv, i * n + j);
        MultiPolynomial chi_n = poly_char_poly(c);              // in nv+1 vars, x last
        MultiPolynomial chi_2n = poly_char_poly(tau_embed(c));  // same variable layout
        MultiPolynomial expected = chi_n.substitute(nv, MultiPolynomial::variable(nv + 1, nv, 2));
        if (chi_2n != expected)
            return make_check("interleave-char-poly", false,
                              "chi(tau(C)) != chi_C(x^2) at n=" + std::to_string(n));
    }
    return make_check("interleave-char-poly", true, "chi_{2n}(tau(C)) = chi_n(C)(x^2) symbolically");
}

inline Check check_centralizer_suite(int n_max, int samples, std::uint64_t seed) {
    SplitMix64 rng(seed);
    for (int n = 1; n <= n_max; ++n) {
        for (int s = 0; s < samples; ++s) {
            RationalMatrix c = random_rational_matrix(rng, n);
            if (s % 5 == 4) {
                // Mix in degenerate samples so "reflects" is genuinely
                // exercised: scalar matrices are irregular for n >= 2.
                Rat a = rng.small_rational();
                c = RationalMatrix::zeros(n, Rat(0));
                for (int i = 0; i < n; ++i) c.at(i, i) = a;
            }
            bool reg_c = is_regular(c);
            bool reg_tau = is_regular(tau_embed(c));
            if (reg_c != reg_tau)
                return make_check("centralizer-suite", false,
                                  "tau does not preserve/reflect regularity at n=" + std::to_string(n));
        }
        // Companion matrices are regular; centralizer basis has size s and
        // is commutative.
        std::vector<Rat> c;
        for (int i = 0; i < n; ++i) c.push_back(rng.small_rational());
        RationalMatrix kappa = kostant_section(c);
        if (!is_regular(kappa)) return make_check("centralizer-suite", false, "companion not regular");
        auto basis = centralizer_basis(kappa);
        if (static_cast<int>(basis.size()) != n)
            return make_check("centralizer-suite", false, "centralizer dimension != n for companion");
        for (const auto& x : basis)
            for (const auto& y : basis)
                if (x * y != y * x)
                    return make_check("centralizer-suite", false, "regular centralizer not commutative");
        if (n >= 2) {
            RationalMatrix scalar = RationalMatrix::identity(n, Rat(0)).scaled(Rat(3));
            if (is_regular(scalar))
                return make_check("centralizer-suite", false, "scalar matrix reported regular");
        }

        // e^T_X(t) at generic rational t: regular, with char poly prod(x - t_i^2).
        std::vector<Rat> t;
        for (int i = 0; i < n; ++i) t.push_back(rat(2 * i + 1, 1) + rng.small_rational(3, 2));
        PolyMatrix ex = e_T_X_matrix(n);
        RationalMatrix ex_t(n, Rat(0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) ex_t.at(i, j) = ex.at(i, j).evaluate(t);
        if (!is_regular(ex_t)) return make_check("centralizer-suite", false, "e^T_X(t) not regular");
        auto monic = char_poly_monic(ex_t);
        std::vector<Rat> expected{Rat(1)};
        for (int i = 0; i < n; ++i) {
            std::vector<Rat> next(expected.size() + 1, Rat(0));
            Rat root = t[static_cast<size_t>(i)] * t[static_cast<size_t>(i)];
            for (size_t k = 0; k < expected.size(); ++k) {
                next[k] += expected[k];
                next[k + 1] -= expected[k] * root;
            }
            expected = next;
        }
        if (monic != expected)
            return make_check("centralizer-suite", false, "char poly of e^T_X(t) != prod(x - t_i^2)");

        // diag(g,g) embedding: lands in the centralizer of tau(C), is
        // multiplicative, and preserves invertibility.
        RationalMatrix cc = random_rational_matrix(rng, n);
        RationalMatrix tc = tau_embed(cc);
        // p(C) commutes with C; keep sampling until invertible.
        RationalMatrix g1 = RationalMatrix::identity(n, Rat(0));
        RationalMatrix g2 = g1;
        for (;;) {
            RationalMatrix p = RationalMatrix::identity(n, Rat(0)).scaled(rng.small_rational());
            p = p + cc.scaled(rng.small_rational());
            p = p + (cc * cc).scaled(rng.small_rational());
            if (p.det() != 0) {
                g1 = p;
                break;
            }
        }
        for (;;) {
            RationalMatrix p = RationalMatrix::identity(n, Rat(0)).scaled(rng.small_rational());
            p = p + cc.scaled(rng.small_rational());
            if (p.det() != 0) {
                g2 = p;
                break;
            }
        }
        RationalMatrix e1 = centralizer_embedding(g1, cc);
        RationalMatrix e2 = centralizer_embedding(g2, cc);
        if (e1 * tc != tc * e1)
            return make_check("centralizer-suite", false, "diag(g,g) does not centralize tau(C)");
        if (centralizer_embedding(g1 * g2, cc) != e1 * e2)
            return make_check("centralizer-suite", false, "centralizer embedding not multiplicative");
    }
    return make_check("centralizer-suite", true, "regularity, commutativity, embedding verified");
}

// ---------------------------------------------------------------- shalika

inline Check check_shalika(int symbolic_max, int samples, std::uint64_t seed) {
    for (int n = 1; n <= symbolic_max; ++n) {
        int nv = 3 * n * n; // entries of A, C, X
        auto var = [&](int block, int i, int j) {
            return MultiPolynomial::variable(nv, block * n * n + i * n + j);
        };
        PolyMatrix a(n, MultiPolynomial::zero(nv)), c = a, x = a;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                a.at(i, j) = var(0, i, j);
                c.at(i, j) = var(1, i, j);
                x.at(i, j) = var(2, i, j);
            }
        // Footnote identity: the conjugate of [[A,I],[C,-A]] by
        // [[I,0],[X,I]] equals [[A-X, I],[C+XA+AX-X^2, X-A]].
        PolyMatrix conj = shalika_conjugate(a, c, x);
        PolyMatrix expected(2 * n, MultiPolynomial::zero(nv));
        PolyMatrix top_left = a - x;
        PolyMatrix bottom_left = c + x * a + a * x - x * x;
        for (int i = 0; i < n; ++i) {
            expected.at(i, n + i) = MultiPolynomial::one(nv);
            for (int j = 0; j < n; ++j) {
                expected.at(i, j) = top_left.at(i, j);
                expected.at(n + i, j) = bottom_left.at(i, j);
                expected.at(n + i, n + j) = MultiPolynomial::zero(nv) - top_left.at(i, j);
            }
        }
        if (conj != expected)
            return make_check("shalika-normal-form", false,
                              "footnote identity fails symbolically at n=" + std::to_string(n));
        // X = A specialization: normal form C + A^2.
        auto res = shalika_normal_form(a, c);
        if (!res.verified || res.normal_form != c + a * a)
            return make_check("shalika-normal-form", false, "symbolic normal form mismatch");
    }
    SplitMix64 rng(seed);
    for (int s = 0; s < samples; ++s) {
        int n = 1 + static_cast<int>(rng.below(3));
        RationalMatrix a = random_rational_matrix(rng, n);
        RationalMatrix c = random_rational_matrix(rng, n);
        auto res = shalika_normal_form(a, c);
        if (!res.verified)
            return make_check("shalika-normal-form", false, "sampled normal form failed to verify");
        // Uniqueness: any other X leaves a nonzero diagonal block.
        RationalMatrix x = a;
        int i = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        x.at(i, j) += rng.small_nonzero_rational();
        RationalMatrix conj = shalika_conjugate(a, c, x);
        bool diag_zero = true;
        for (int r = 0; r < n && diag_zero; ++r)
            for (int cidx = 0; cidx < n; ++cidx)
                if (conj.at(r, cidx) != 0) {
                    diag_zero = false;
                    break;
                }
        if (diag_zero)
            return make_check("shalika-normal-form", false, "normal form is not unique");
    }
    return make_check("shalika-normal-form", true, "footnote identity and uniqueness verified");
}

// --------------------------------------------------------------- spectral

inline Check check_spectral_suite(int n_max, long lam_bound) {
    // Shift example: generator degrees of Sym(g_2n[-2]) shear to {0,2,2,4}.
    for (int n = 1; n <= n_max; ++n) {
        BigradedSeries gen = sym_g2n_generator_series(n);
        BigradedSeries sheared = shear(gen);
        Int nn = Int(n) * n;
        if (sheared.at(4, -2) != nn || sheared.at(0, 2) != nn || sheared.at(2, 0) != 2 * nn)
            return make_check("spectral-suite", false, "shift example degrees wrong");
        if (sheared.total_dimension() != gen.total_dimension())
            return make_check("spectral-suite", false, "shear not dimension preserving");
        if (!(unshear(sheared) == gen))
            return make_check("spectral-suite", false, "shear not invertible");
    }

    // R(IC_{omega_1}) and R(IC_det).
    for (int n = 1; n <= n_max; ++n) {
        Coweight omega1;
        omega1.parts.assign(static_cast<size_t>(2 * n), 0);
        omega1.parts[0] = 1;
        auto dec = branch_psi_x(omega1);
        Coweight std_n;
        std_n.parts.assign(static_cast<size_t>(n), 0);
        std_n.parts[0] = 1;
        bool found_plus = false, found_minus = false;
        if (dec.terms.size() != 2)
            return make_check("spectral-suite", false, "R(IC_omega1) does not have two summands");
        for (const auto& t : dec.terms) {
            if (t.lam == std_n && t.mult == 1 && t.j == 1) found_plus = true;
            if (t.lam == std_n && t.mult == 1 && t.j == -1) found_minus = true;
        }
        if (!found_plus || !found_minus)
            return make_check("spectral-suite", false, "R(IC_omega1) != two shifted copies of V_omega1");

        Coweight det2n;
        det2n.parts.assign(static_cast<size_t>(2 * n), 1);
        auto decdet = branch_psi_x(det2n);
        Coweight det_sq;
        det_sq.parts.assign(static_cast<size_t>(n), 2);
        if (decdet.terms.size() != 1 || !(decdet.terms[0].lam == det_sq) ||
            decdet.terms[0].j != 0 || decdet.terms[0].mult != 1)
            return make_check("spectral-suite", false, "R(IC_det) != det^{(x)2} at shift 0");
    }

    // Hilbert-series identity and structural invariants of the branching.
    for (int n = 1; n <= n_max; ++n) {
        for (long total = 0; total <= lam_bound; ++total) {
            for (const auto& Lam : partitions_of(total, 2 * n)) {
                auto img = phi_on_free_module(Lam);
                if (!img.hilbert_identity)
                    return make_check("spectral-suite", false,
                                      "Hilbert-series identity fails at Lam=" + Lam.str());
                auto dec = branch_psi_x(Lam);
                if (dec.total_dimension() != weyl_dimension(Lam))
                    return make_check("spectral-suite", false,
                                      "branching dimensions do not sum at Lam=" + Lam.str());
                long parity = Lam.size() % 2;
                for (const auto& t : dec.terms)
                    if ((static_cast<long>(t.j) % 2 + 2) % 2 != parity)
                        return make_check("spectral-suite", false,
                                          "branching weight parity broken at Lam=" + Lam.str());
                // h = 1 diagonal restriction cross-check.
                std::map<Coweight, Int> diag;
                for (const auto& t : dec.terms) diag[t.lam] += t.mult;
                Int total_dim = 0;
                for (const auto& [lam, m] : diag) total_dim += m * weyl_dimension(lam);
                if (total_dim != weyl_dimension(Lam))
                    return make_check("spectral-suite", false, "diagonal branching mismatch");
            }
        }
    }
    return make_check("spectral-suite", true, "shear, branching, Hilbert identity verified");
}

} // namespace satake
