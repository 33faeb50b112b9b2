#include <doctest.h>

#include <random>

#include "qschur/ring.hpp"

using namespace qschur;

namespace {

SigPtr xc_sig(int n) {
    return make_signature({{"x", n, VarKind::ordinary}, {"c", n, VarKind::square_zero}});
}

SigPtr uv_sig(int n0, int n1) {
    return make_signature({{"u", n0, VarKind::ordinary}, {"v", n1, VarKind::ordinary}});
}

Poly rnd(const SigPtr& sig, int maxdeg, std::mt19937_64& rng) {
    auto monos = monomial_basis(sig, maxdeg);
    std::uniform_int_distribution<size_t> pick(0, monos.size() - 1);
    std::uniform_int_distribution<int> coeff(-5, 5);
    Poly out = Poly::zero(sig);
    for (int t = 0; t < 4; ++t) out += monos[pick(rng)] * Scalar(coeff(rng));
    return out;
}

} // namespace

TEST_CASE("square-zero variables") {
    SigPtr sig = xc_sig(2);
    Poly c1 = Poly::variable(sig, "c", 1);
    Poly c2 = Poly::variable(sig, "c", 2);
    CHECK((c1 * c1).is_zero());
    CHECK((c2 * c2).is_zero());
    CHECK(!(c1 * c2).is_zero());
    Poly p = (c1 + c2) * (c1 + c2);
    CHECK(p == c1 * c2 * Scalar(2));
}

TEST_CASE("degrees are cohomological and additive") {
    SigPtr sig = xc_sig(2);
    Poly x1 = Poly::variable(sig, "x", 1);
    Poly c1 = Poly::variable(sig, "c", 1);
    CHECK(x1.degree() == 2);
    CHECK((x1 * x1 * c1).degree() == 6);
    std::mt19937_64 rng(7);
    for (int t = 0; t < 20; ++t) {
        Poly p = rnd(sig, 6, rng).component(4);
        Poly q = rnd(sig, 6, rng).component(6);
        if (p.is_zero() || q.is_zero()) continue;
        Poly pq = p * q;
        if (!pq.is_zero()) CHECK(pq.degree() == 10);
    }
}

TEST_CASE("permute_action examples") {
    SigPtr sig = xc_sig(2);
    Poly x1 = Poly::variable(sig, "x", 1), x2 = Poly::variable(sig, "x", 2);
    Poly c1 = Poly::variable(sig, "c", 1), c2 = Poly::variable(sig, "c", 2);
    Permutation s1 = Permutation::adjacent(2, 1);
    CHECK(permute_action(s1, {"x", "c"}, x1 * c2) == x2 * c1);
    CHECK(permute_action(s1, {"x"}, x1 + x2) == x1 + x2);

    SigPtr uv = uv_sig(2, 1);
    Poly u1 = Poly::variable(uv, "u", 1), u2 = Poly::variable(uv, "u", 2);
    Poly v1 = Poly::variable(uv, "v", 1);
    CHECK(permute_action(s1, {"u"}, u1 * u1 * v1) == u2 * u2 * v1);
    CHECK_THROWS_AS(permute_action(s1, {"v"}, v1), Error); // count mismatch
}

TEST_CASE("permute_action is an action and a ring map") {
    SigPtr sig = xc_sig(3);
    std::mt19937_64 rng(11);
    std::vector<Permutation> perms;
    std::vector<int> img{0, 1, 2};
    do perms.push_back(Permutation(img));
    while (std::next_permutation(img.begin(), img.end()));
    for (int t = 0; t < 10; ++t) {
        Poly p = rnd(sig, 6, rng), q = rnd(sig, 6, rng);
        for (const auto& a : perms)
            for (const auto& b : perms) {
                CHECK(permute_action(a, {"x", "c"}, p * q) ==
                      permute_action(a, {"x", "c"}, p) * permute_action(a, {"x", "c"}, q));
                CHECK(permute_action(a * b, {"x", "c"}, p) ==
                      permute_action(a, {"x", "c"}, permute_action(b, {"x", "c"}, p)));
            }
    }
}

TEST_CASE("exact_div examples") {
    SigPtr sig = xc_sig(2);
    Poly x1 = Poly::variable(sig, "x", 1), x2 = Poly::variable(sig, "x", 2);
    Poly c1 = Poly::variable(sig, "c", 1), c2 = Poly::variable(sig, "c", 2);
    CHECK(exact_div(x1 * x1 - x2 * x2, x1 - x2) == x1 + x2);
    CHECK(exact_div((c1 + c2) * (x1 - x2), x1 - x2) == c1 + c2);
    CHECK_THROWS_AS(exact_div(c1 - c2, x1 - x2), NotDivisible);
}

TEST_CASE("exact_div round trip on random data") {
    SigPtr sig = xc_sig(3);
    Poly x1 = Poly::variable(sig, "x", 1), x3 = Poly::variable(sig, "x", 3);
    std::mt19937_64 rng(3);
    for (int t = 0; t < 40; ++t) {
        Poly p = rnd(sig, 6, rng);
        Poly d = x1 - x3; // ordinary-variable binomial
        CHECK(exact_div(p * d, d) == p);
    }
}

TEST_CASE("is_invariant examples") {
    SigPtr uv = uv_sig(2, 1);
    Poly u1 = Poly::variable(uv, "u", 1), u2 = Poly::variable(uv, "u", 2);
    Poly v1 = Poly::variable(uv, "v", 1);
    CHECK(is_invariant(u1 + u2, Composition{2}, {"u"}));
    CHECK(!is_invariant(u1, Composition{2}, {"u"}));
    CHECK(is_invariant(u1 * u2 + v1, Composition{2}, {"u"}));
}

TEST_CASE("monomial_basis examples and counts") {
    SigPtr sig = xc_sig(1);
    auto b = monomial_basis(sig, 2);
    REQUIRE(b.size() == 3); // 1, x1, c1
    CHECK(b[0] == Poly::constant(sig, Scalar(1)));

    SigPtr xs = make_signature({{"x", 2, VarKind::ordinary}});
    SymmetryGroup g{{{"x"}, Composition{2}}};
    auto inv = invariant_basis(xs, g, 4);
    // {1, e1, e1^2-ish, e2} span: orbit sums 1, x1+x2, x1^2+x2^2, x1 x2
    REQUIRE(inv.size() == 4);
    for (const auto& p : inv) CHECK(is_invariant(p, Composition{2}, {"x"}));

    CHECK(monomial_basis(sig, 0).size() == 1);

    // binomial check: degree-2d monomial count in n pure variables
    SigPtr x3 = make_signature({{"x", 3, VarKind::ordinary}});
    auto all = monomial_basis(x3, 8);
    std::map<int, int> per_degree;
    for (const auto& m : all) ++per_degree[m.degree() < 0 ? 0 : m.degree()];
    auto binom = [](int n, int k) {
        long r = 1;
        for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
        return r;
    };
    for (int d = 0; d <= 4; ++d) CHECK(per_degree[2 * d] == binom(d + 2, 2));
}

TEST_CASE("polynomial text syntax round trips") {
    SigPtr sig = make_signature({{"u", 2, VarKind::ordinary},
                                 {"v", 2, VarKind::ordinary},
                                 {"c", 2, VarKind::square_zero},
                                 {"x", 2, VarKind::ordinary}});
    Poly p = parse_poly(sig, "3*u1^2*v2 - c1*x2 + 1");
    Poly q = Poly::variable(sig, "u", 1);
    q = q * q * Poly::variable(sig, "v", 2) * Scalar(3) -
        Poly::variable(sig, "c", 1) * Poly::variable(sig, "x", 2) + Poly::constant(sig, Scalar(1));
    CHECK(p == q);
    CHECK(parse_poly(sig, p.str()) == p);
    CHECK(parse_poly(sig, " ( u1 + v1 ) ^ 2 ") == parse_poly(sig, "u1^2 + 2*u1*v1 + v1^2"));
    CHECK_THROWS_AS(parse_poly(sig, "u1 + "), ParseError);
    CHECK_THROWS_AS(parse_poly(sig, "w1"), ParseError);

    std::mt19937_64 rng(23);
    for (int t = 0; t < 20; ++t) {
        Poly r = rnd(sig, 6, rng);
        CHECK(parse_poly(sig, r.str()) == r);
    }
}

TEST_CASE("arithmetic requires matching signatures") {
    SigPtr a = xc_sig(2), b = xc_sig(3);
    Poly pa = Poly::variable(a, "x", 1), pb = Poly::variable(b, "x", 1);
    CHECK_THROWS_AS(pa + pb, RingMismatch);
}

TEST_CASE("scalars stay exact and support prime fields") {
    Scalar a(7), b(3);
    CHECK(a.div(b) == Scalar(Rat(7, 3)));
    Scalar p5 = Scalar::mod_p(7, 5);
    CHECK(p5 == Scalar::mod_p(2, 5));
    CHECK((p5 * Scalar::mod_p(3, 5)) == Scalar::mod_p(1, 5));
    CHECK(Scalar::mod_p(2, 5).div(Scalar::mod_p(3, 5)) == Scalar::mod_p(4, 5));
}
