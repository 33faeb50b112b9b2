#include <doctest.h>

#include "qschur/demazure.hpp"

using namespace qschur;

namespace {
const std::vector<std::string> X{"x"};
}

TEST_CASE("demazure examples") {
    SigPtr sig = make_signature({{"x", 2, VarKind::ordinary}});
    Poly x1 = Poly::variable(sig, "x", 1), x2 = Poly::variable(sig, "x", 2);
    CHECK(demazure(Permutation::adjacent(2, 1), X, x1) == Poly::constant(sig, Scalar(1)));
    CHECK(demazure(Permutation::adjacent(2, 1), X, x1 * x2).is_zero());

    SigPtr xc = make_signature({{"x", 2, VarKind::ordinary}, {"c", 2, VarKind::square_zero}});
    Poly y1 = Poly::variable(xc, "x", 1), y2 = Poly::variable(xc, "x", 2);
    Poly c1 = Poly::variable(xc, "c", 1), c2 = Poly::variable(xc, "c", 2);
    Poly in = c1 * (y1 - y2 - c1 - c2);
    CHECK(demazure(Permutation::adjacent(2, 1), {"x", "c"}, in) == c1 + c2);
}

TEST_CASE("demazure shuffle examples") {
    SigPtr u1 = make_signature({{"u", 2, VarKind::ordinary}});
    CHECK(demazure_shuffle(1, 1, {"u"}, Poly::variable(u1, "u", 1)) ==
          Poly::constant(u1, Scalar(1)));

    SigPtr x3 = make_signature({{"x", 3, VarKind::ordinary}});
    Poly x33 = Poly::variable(x3, "x", 3);
    // direct evaluation of the composite along the unique reduced word
    Poly img = demazure_shuffle(2, 1, X, x33 * x33);
    Poly alt = demazure_step(1, X, demazure_step(2, X, x33 * x33));
    CHECK(img == alt);
    CHECK(img == Poly::constant(x3, Scalar(1)));

    // degree reasons: partial shuffles kill constants
    CHECK(demazure_shuffle(2, 1, X, Poly::constant(x3, Scalar(1))).is_zero());
}

TEST_CASE("staircase and the longest element") {
    for (int n = 1; n <= 6; ++n) {
        SigPtr sig = make_signature({{"x", n, VarKind::ordinary}});
        Poly D = staircase(sig, "x", n);
        if (n == 1) CHECK(D == Poly::constant(sig, Scalar(1)));
        if (n == 2) CHECK(D == Poly::variable(sig, "x", 1));
        if (n == 3)
            CHECK(D == Poly::variable(sig, "x", 1) * Poly::variable(sig, "x", 1) *
                           Poly::variable(sig, "x", 2));
        CHECK(demazure(longest_element(n), X, D) == Poly::constant(sig, Scalar(1)));
    }
}

TEST_CASE("square-zero ring swaps x and c together") {
    SigPtr xc = make_signature({{"x", 2, VarKind::ordinary}, {"c", 2, VarKind::square_zero}});
    Poly c1 = Poly::variable(xc, "c", 1), c2 = Poly::variable(xc, "c", 2);
    // c's alone are not divisible: the operator refuses rather than truncates
    CHECK_THROWS_AS(demazure_step(1, {"x", "c"}, c1), NotDivisible);
    CHECK(demazure_step(1, {"x", "c"}, c1 + c2).is_zero());
}
