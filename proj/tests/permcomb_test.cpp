#include <doctest.h>

#include <algorithm>

#include "qschur/permcomb.hpp"

using namespace qschur;

TEST_CASE("refinement order") {
    CHECK(refines({1, 1, 1}, {2, 1}));
    CHECK(!refines({2, 1}, {1, 2}));
    Composition l{3, 1, 2};
    CHECK(refines(l, l));
    CHECK_THROWS_AS(refines({1, 1}, {3}), Error);
}

TEST_CASE("permutation basics") {
    Permutation w = Permutation::from_one_line({2, 3, 1});
    CHECK(w.length() == 2);
    CHECK((w * w.inverse()).is_identity());
    auto word = w.reduced_word();
    CHECK(static_cast<int>(word.size()) == w.length());
    Permutation prod = Permutation::identity(3);
    for (int k : word) prod = prod * Permutation::adjacent(3, k);
    CHECK(prod == w);
}

TEST_CASE("double coset examples") {
    CHECK(double_cosets({2, 1}, {1, 2}).size() == 2);
    CHECK(double_cosets({3}, {3}).size() == 1);
    CHECK(double_cosets({3}, {3})[0].w.is_identity());
    auto cs = double_cosets({1, 1}, {1, 1});
    REQUIRE(cs.size() == 2);
    CHECK(cs[0].w.is_identity());
    CHECK(cs[1].w == Permutation::adjacent(2, 1));
}

TEST_CASE("coset partition identity") {
    // sum over cosets of |S_lambda| |S_mu| / |S_lambda'| is n!
    auto fact = [](int k) {
        long f = 1;
        for (int t = 2; t <= k; ++t) f *= t;
        return f;
    };
    auto order = [&](const Composition& c) {
        long f = 1;
        for (int b : c) f *= fact(b);
        return f;
    };
    for (int n = 2; n <= 6; ++n)
        for (const auto& lambda : all_compositions(n))
            for (const auto& mu : all_compositions(n)) {
                long total = 0;
                for (const auto& d : double_cosets(lambda, mu))
                    total += order(lambda) * order(mu) / order(d.lambda_p);
                CHECK(total == fact(n));
            }
}

TEST_CASE("coset datum invariants") {
    for (int n = 2; n <= 5; ++n)
        for (const auto& lambda : all_compositions(n))
            for (const auto& mu : all_compositions(n))
                for (const auto& d : double_cosets(lambda, mu)) {
                    // refinements are compositions of n
                    CHECK(comp_sum(d.lambda_p) == n);
                    CHECK(comp_sum(d.mu_p) == n);
                    CHECK(refines(d.lambda_p, lambda));
                    CHECK(refines(d.mu_p, mu));
                    // sigma transforms lambda' into mu'
                    Composition applied(d.mu_p.size(), 0);
                    for (size_t t = 0; t < d.lambda_p.size(); ++t)
                        applied[static_cast<size_t>(d.sigma(static_cast<int>(t)))] = d.lambda_p[t];
                    CHECK(applied == d.mu_p);
                    // the word is reduced
                    CHECK(static_cast<int>(d.word.size()) == d.sigma.length());
                    // the representative realizes the cell matrix
                    for (size_t i = 0; i < lambda.size(); ++i)
                        for (size_t j = 0; j < mu.size(); ++j) {
                            int lo_l = 0;
                            for (size_t t = 0; t < i; ++t) lo_l += lambda[t];
                            int lo_m = 0;
                            for (size_t t = 0; t < j; ++t) lo_m += mu[t];
                            int cnt = 0;
                            for (int p = lo_m; p < lo_m + mu[j]; ++p)
                                if (d.w(p) >= lo_l && d.w(p) < lo_l + lambda[i]) ++cnt;
                            CHECK(cnt == d.cells[i][j]);
                        }
                }
}

TEST_CASE("coloured coset examples") {
    IComposition b1{alpha0(), alpha1()}, g1{alpha1(), alpha0()};
    CHECK(coloured_cosets(b1, g1).size() == 1);

    IComposition dd{delta(), delta()};
    CHECK(coloured_cosets(dd, dd).size() == 4);

    IComposition twod{delta() * 2};
    CHECK(coloured_cosets(twod, dd).size() == 1);
}

TEST_CASE("coloured coset refinements interleave per colour") {
    IComposition dd{delta(), delta()};
    for (const auto& d : coloured_cosets(dd, dd)) {
        CHECK(icomp_sum(d.beta_p) == icomp_sum(dd));
        CHECK(irefines(d.beta_p, dd));
        CHECK(irefines(d.gamma_p, dd));
        IComposition applied(d.gamma_p.size());
        for (size_t t = 0; t < d.beta_p.size(); ++t)
            applied[static_cast<size_t>(d.sigma(static_cast<int>(t)))] = d.beta_p[t];
        CHECK(applied == d.gamma_p);
    }
}

TEST_CASE("coloured composition map to I-compositions") {
    ColouredComposition c{{2, Colour::tau}, {1, Colour::eps}};
    IComposition expect{alpha0() * 2, alpha1() * 2, delta()};
    CHECK(ccomp_to_icomp(c) == expect);
    CHECK(ccomp_underlying(c) == Composition{2, 1});
}

TEST_CASE("enumerations") {
    CHECK(all_compositions(4).size() == 8);
    CHECK(all_partitions(5).size() == 7);
    CHECK(all_icompositions({1, 1}).size() == 3);
    CHECK(all_icompositions({2, 2}).size() == 26);
}
