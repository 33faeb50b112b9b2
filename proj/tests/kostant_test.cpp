#include <doctest.h>

#include "qschur/kostant.hpp"

using namespace qschur;

TEST_CASE("theta slopes") {
    CHECK(theta(alpha0()) == Rat(0));
    CHECK(theta(alpha1()) == Rat(1));
    CHECK(theta(delta()) == Rat(1, 2));
    CHECK_THROWS_AS(theta({0, 0}), Error);
}

TEST_CASE("root chain order") {
    CHECK(root_chain_compare(real_root(0, 0), real_root(0, 1)) < 0); // a0 < a0 + d
    CHECK(root_chain_compare(delta_circ(), delta_bullet()) < 0);
    CHECK(root_chain_compare(real_root(1, 1), real_root(1, 0)) < 0); // a1 + d < a1
    CHECK(root_chain_compare(real_root(0, 3), delta_circ()) < 0);
    CHECK(root_chain_compare(delta_bullet(), real_root(1, 5)) < 0);
    CHECK(root_chain_compare(delta_bullet(), delta_bullet()) == 0);

    // theta is monotone along the chain except at the marked tie
    std::vector<MarkedRoot> chain{real_root(0, 0), real_root(0, 1), real_root(0, 2), delta_circ(),
                                  delta_bullet(),  real_root(1, 2), real_root(1, 1), real_root(1, 0)};
    for (size_t i = 0; i + 1 < chain.size(); ++i) {
        CHECK(root_chain_compare(chain[i], chain[i + 1]) < 0);
        CHECK(theta(chain[i].vec()) <= theta(chain[i + 1].vec()));
    }
}

TEST_CASE("convexity spot-check for real roots") {
    // beta <= beta' with beta + beta' a root implies beta <= beta+beta' <= beta'
    std::vector<MarkedRoot> reals;
    for (int k = 0; k <= 6; ++k) {
        reals.push_back(real_root(0, k));
        reals.push_back(real_root(1, k));
    }
    auto is_real_root = [](const DimVec& v) {
        return v.n0 >= 0 && v.n1 >= 0 && (v.n0 - v.n1 == 1 || v.n1 - v.n0 == 1);
    };
    for (const auto& b1 : reals)
        for (const auto& b2 : reals) {
            if (root_chain_compare(b1, b2) > 0) continue;
            DimVec s = b1.vec() + b2.vec();
            if (!is_real_root(s)) continue;
            MarkedRoot sum = real_root(s.n1 > s.n0 ? 1 : 0, std::min(s.n0, s.n1));
            CHECK(root_chain_compare(b1, sum) <= 0);
            CHECK(root_chain_compare(sum, b2) <= 0);
        }
}

TEST_CASE("enumerations of (marked) Kostant partitions") {
    // delta admits (a1, a0), (d*), (do); forgetting markers leaves two.
    CHECK(enumerate_mkp(delta()).size() == 3);
    CHECK(enumerate_kp(delta()).size() == 2);
    CHECK(enumerate_mkp(delta() * 2).size() == 8);
    CHECK(enumerate_kp(delta() * 2).size() == 5);
    CHECK(enumerate_mkp(alpha0()).size() == 1);

    // bijection count: #mkp = sum over kp of (delta multiplicity + 1)
    for (DimVec v : {DimVec{2, 2}, DimVec{3, 2}, DimVec{3, 3}, DimVec{4, 2}}) {
        long expect = 0;
        for (const auto& kp : enumerate_kp(v)) {
            int kdelta = 0;
            for (const auto& [m, r] : kp.parts)
                if (!r.is_real()) kdelta = m;
            expect += kdelta + 1;
        }
        CHECK(static_cast<long>(enumerate_mkp(v).size()) == expect);
    }

    // strictly decreasing roots and correct weights
    for (const auto& p : enumerate_mkp({3, 3})) {
        CHECK(p.weight() == DimVec{3, 3});
        for (size_t t = 0; t + 1 < p.parts.size(); ++t)
            CHECK(root_chain_compare(p.parts[t + 1].second, p.parts[t].second) < 0);
    }
}

TEST_CASE("reverse lexicographic order") {
    MKPart a{{{2, real_root(1, 0)}, {2, real_root(0, 0)}}}; // (2a1, 2a0)
    MKPart b{{{2, delta_bullet()}}};                        // (2d*)
    CHECK(revlex_compare(a, b) < 0);
    CHECK(revlex_compare(a, a) == 0);
    MKPart c{{{1, delta_bullet()}, {1, delta_circ()}}}; // (d*, do)
    MKPart d{{{2, delta_circ()}}};                      // (2do)
    CHECK(revlex_compare(c, d) < 0);
}

TEST_CASE("gamma composition examples") {
    PolyheredityIndex i1{MKPart{{{2, real_root(1, 0)}, {2, real_root(0, 0)}}}, {}, {}};
    CHECK(gamma_composition(i1) == IComposition{alpha1() * 2, alpha0() * 2});

    PolyheredityIndex i2{MKPart{{{1, delta_bullet()}, {1, delta_circ()}}}, {1}, {1}};
    CHECK(gamma_composition(i2) == IComposition{delta(), alpha0(), alpha1()});

    PolyheredityIndex i3{MKPart{{{2, delta_circ()}}}, {}, {1, 1}};
    CHECK(gamma_composition(i3) == IComposition{alpha0(), alpha1(), alpha0(), alpha1()});
}

TEST_CASE("noncuspidality") {
    CHECK(is_noncuspidal({alpha1(), alpha0()}));
    CHECK(!is_noncuspidal({alpha0(), alpha1()}));
    CHECK(!is_noncuspidal({delta(), delta()}));
    CHECK_THROWS_AS(is_noncuspidal({}), Error);
}

TEST_CASE("polyheredity chain for 2 delta matches the printed example") {
    auto chain = polyheredity_chain({2, 2});
    std::vector<IComposition> expect{
        {alpha1() * 2, alpha0() * 2},
        {alpha1(), delta(), alpha0()},
        {alpha1(), alpha0(), alpha1(), alpha0()},
        {alpha1(), alpha0(), delta()},
        {delta(), alpha1(), alpha0()},
        {delta() * 2},
        {delta(), delta()},
        {delta(), alpha0(), alpha1()},
        {alpha0() * 2, alpha1() * 2},
        {alpha0(), alpha1(), alpha0(), alpha1()},
    };
    REQUIRE(chain.size() == expect.size());
    for (size_t i = 0; i < chain.size(); ++i) CHECK(chain[i].second == expect[i]);

    // the restricted chain keeps the imaginary-support indices, in order
    auto prime = polyheredity_chain({2, 2}, true);
    std::vector<IComposition> expect_prime{
        {delta() * 2},
        {delta(), delta()},
        {delta(), alpha0(), alpha1()},
        {alpha0() * 2, alpha1() * 2},
        {alpha0(), alpha1(), alpha0(), alpha1()},
    };
    REQUIRE(prime.size() == expect_prime.size());
    for (size_t i = 0; i < prime.size(); ++i) CHECK(prime[i].second == expect_prime[i]);
}

TEST_CASE("polyheredity chain for delta and a real weight") {
    auto chain = polyheredity_chain(delta());
    REQUIRE(chain.size() == 3);
    CHECK(chain[0].second == IComposition{alpha1(), alpha0()});
    CHECK(chain[1].second == IComposition{delta()});
    CHECK(chain[2].second == IComposition{alpha0(), alpha1()});

    auto single = polyheredity_chain(alpha0());
    REQUIRE(single.size() == 1);
    CHECK(single[0].second == IComposition{alpha0()});
}

TEST_CASE("every gamma refines its marked partition") {
    for (DimVec v : {DimVec{2, 2}, DimVec{3, 2}, DimVec{3, 3}})
        for (const auto& [idx, gamma] : polyheredity_chain(v)) {
            IComposition mk;
            for (const auto& [m, r] : idx.mkp.parts) mk.push_back(r.vec() * m);
            CHECK(irefines(gamma, mk));
        }
}

TEST_CASE("root text forms") {
    CHECK(parse_dimvec_block("a0+2d") == DimVec{3, 2});
    CHECK(parse_dimvec_block("2a1") == DimVec{0, 2});
    CHECK(parse_dimvec_block("3d") == DimVec{3, 3});
    CHECK(!parse_dimvec_block("q7").has_value());
    CHECK(real_root(0, 2).str() == "a0+2d");
    CHECK(delta_bullet().str() == "d*");
    CHECK(delta_circ().str() == "do");
}
