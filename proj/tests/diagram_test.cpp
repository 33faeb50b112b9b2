#include <doctest.h>

#include "qschur/diagram.hpp"
#include "qschur/lattice.hpp"
#include "qschur/suites.hpp"

using namespace qschur;

TEST_CASE("parsing examples") {
    Diagram id = parse_diagram("id[(1,1)+(1,1)]");
    CHECK(boundary_eq(id.source, Boundary(IComposition{delta(), delta()})));
    CHECK(id.nodes.size() == 1);

    Diagram two = parse_diagram("split[2d->d|d]; coupon[u1+u2]");
    CHECK(two.nodes.size() == 2);
    CHECK(boundary_eq(two.source, Boundary(IComposition{delta() * 2})));
    CHECK(boundary_eq(two.target, Boundary(IComposition{delta(), delta()})));

    CHECK_THROWS_AS(parse_diagram("merge[d|d->2d"), ParseError);
    CHECK_THROWS_AS(parse_diagram("split[2d->d|a0]"), ParseError);
    CHECK_THROWS_AS(parse_diagram("id[2d]; coupon[u1]; cross[@1]"), ParseError); // out of range

    // coloured grammar
    Diagram col = parse_diagram("id[2t+1e]; cc[t->e@1]; merge[2e|1e->3e]");
    CHECK(boundary_eq(col.target, Boundary(ColouredComposition{{3, Colour::eps}})));
    Diagram mx = parse_diagram("id[1e+1t]; mx[@1]");
    CHECK(boundary_eq(mx.target, Boundary(ColouredComposition{{1, Colour::tau}, {1, Colour::eps}})));
}

TEST_CASE("parse errors carry positions") {
    try {
        parse_diagram("id[2d]; splot[2d->d|d]");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.position >= 8);
    }
}

TEST_CASE("evaluation examples") {
    // split then merge at delta <-> (a0, a1), variant m: multiplication by u1 - v1
    Diagram dg = parse_diagram("id[d]; split[d->a0|a1]; merge[a0|a1->d]");
    Operator op = eval_diagram(dg, SchurVariant::seminilpotent);
    SigPtr sig = boundary_sig(dg.source);
    Poly u1 = Poly::variable(sig, "u", 1), v1 = Poly::variable(sig, "v", 1);
    for (const auto& P : boundary_basis(dg.source, 6)) CHECK(apply(op, P) == (u1 - v1) * P);

    Operator idop = eval_diagram(parse_diagram("id[d+d]"), SchurVariant::seminilpotent);
    for (const auto& P : boundary_basis(idop.source, 6)) CHECK(apply(idop, P) == P);

    // associativity of splits as diagrams
    Diagram l = parse_diagram("id[3d]; split[3d->d|2d]; split[2d->d|d@2]");
    Diagram r = parse_diagram("id[3d]; split[3d->2d|d]; split[2d->d|d@1]");
    for (SchurVariant v :
         {SchurVariant::standard, SchurVariant::seminilpotent, SchurVariant::nilpotent})
        CHECK(equal_up_to_degree(eval_diagram(l, v), eval_diagram(r, v), 8));
}

TEST_CASE("evaluation is functorial under concatenation") {
    std::string bottom = "id[2d]; split[2d->d|d]";
    std::string top = "id[d+d]; cross[@1]";
    Diagram whole = parse_diagram(bottom + "; cross[@1]");
    Operator split_op_ = eval_diagram(parse_diagram(bottom), SchurVariant::seminilpotent);
    Operator cross_op = eval_diagram(parse_diagram(top), SchurVariant::seminilpotent);
    Operator glued = compose(cross_op, split_op_);
    CHECK(equal_up_to_degree(eval_diagram(whole, SchurVariant::seminilpotent), glued, 8));
}

TEST_CASE("crossings square to degree-bounded operators") {
    // same thin real blocks: the crossing squares to zero
    IComposition a00{alpha0(), alpha0()};
    for (SchurVariant v :
         {SchurVariant::standard, SchurVariant::seminilpotent, SchurVariant::nilpotent}) {
        Operator R = kron_crossing(v, a00, 1);
        Operator R2 = compose(R, R);
        CHECK(R2.degshift == 2 * R.degshift);
        for (const auto& P : boundary_basis(R.source, 6)) CHECK(apply(R2, P).is_zero());
    }
    // equal delta blocks: the square is computable and degree-bounded
    IComposition dd{delta(), delta()};
    Operator R = kron_crossing(SchurVariant::seminilpotent, dd, 1);
    Operator R2 = compose(R, R);
    CHECK(R2.degshift == 2 * R.degshift);
    for (const auto& P : boundary_basis(R.source, 6)) {
        Poly img = apply(R2, P);
        if (!img.is_zero()) CHECK(img.degree() == P.degree() + R2.degshift);
    }
}

TEST_CASE("psi elements") {
    // w = e at a one-block composition with coupon 1 is the identity idempotent
    IComposition a{delta()};
    auto data = coloured_cosets(a, a);
    REQUIRE(data.size() == 1);
    SigPtr sig = boundary_sig(Boundary(a));
    Diagram dg = psi_element(data[0], Poly::constant(sig, Scalar(1)), a, a);
    Operator op = eval_diagram(dg, SchurVariant::seminilpotent);
    for (const auto& P : boundary_basis(Boundary(a), 8)) CHECK(apply(op, P) == P);

    // block swap at (delta, delta): a split-cross-merge sandwich appears
    IComposition dd{delta(), delta()};
    bool saw_cross = false;
    for (const auto& d : coloured_cosets(dd, dd)) {
        Diagram psi = psi_element(d, Poly::constant(boundary_sig(Boundary(dd)), Scalar(1)), dd, dd);
        Operator op2 = eval_diagram(psi, SchurVariant::seminilpotent);
        CHECK(boundary_eq(op2.source, Boundary(dd)));
        CHECK(boundary_eq(op2.target, Boundary(dd)));
        for (const auto& n : psi.nodes)
            if (n.kind == DiagramNode::Kind::cross) saw_cross = true;
    }
    CHECK(saw_cross);
}

TEST_CASE("the worked coloured psi diagram parses and evaluates") {
    // c-lambda = (2t, 2e, 2t), c-mu = (3t, 3e), x = [1,3,5,2,4,6]
    ColouredComposition cla{{2, Colour::tau}, {2, Colour::eps}, {2, Colour::tau}};
    ColouredComposition cmu{{3, Colour::tau}, {3, Colour::eps}};
    auto cosets = double_cosets(ccomp_underlying(cla), ccomp_underlying(cmu));
    const CosetDatum* found = nullptr;
    Permutation x = Permutation::from_one_line({1, 3, 5, 2, 4, 6});
    for (const auto& d : cosets)
        if (d.w == x) found = &d;
    REQUIRE(found != nullptr);
    ColouredComposition mid = psi_coupon_colouring(*found, cla, cmu);
    // all cells are thin, so the diagram only needs thin crossings
    for (const auto& b : mid) CHECK(b.size == 1);
    auto coupons = coupon_basis(mid, 2);
    REQUIRE(!coupons.empty());
    Diagram dg = psi_element_curve(*found, coupons[0], cla, cmu);
    Operator op = eval_diagram(dg, SchurVariant::seminilpotent);
    CHECK(boundary_eq(op.source, Boundary(cla)));
    CHECK(boundary_eq(op.target, Boundary(cmu)));
    Poly img = apply(op, Poly::constant(boundary_sig(Boundary(cla)), Scalar(1)));
    CHECK(in_boundary_space(op.target, img));
}

TEST_CASE("psi independence across small weights") {
    for (DimVec alpha : {DimVec{2, 1}, DimVec{3, 0}, DimVec{1, 1}}) {
        BasisCount bc = basis_independence(SchurVariant::seminilpotent, alpha, 6);
        INFO(alpha.str());
        CHECK(bc.independent);
        CHECK(bc.rank == bc.elements);
    }
}

TEST_CASE("coloured psi elements over the integral coupon spaces") {
    // all coloured boundary pairs of weight 2; every crossing is thin there
    std::vector<ColouredComposition> comps{
        {{2, Colour::tau}},
        {{2, Colour::eps}},
        {{1, Colour::tau}, {1, Colour::tau}},
        {{1, Colour::tau}, {1, Colour::eps}},
        {{1, Colour::eps}, {1, Colour::tau}},
        {{1, Colour::eps}, {1, Colour::eps}},
    };
    for (const auto& cla : comps)
        for (const auto& cmu : comps) {
            std::vector<Operator> ops;
            long expected = 0;
            for (const auto& d : double_cosets(ccomp_underlying(cla), ccomp_underlying(cmu))) {
                ColouredComposition mid = psi_coupon_colouring(d, cla, cmu);
                for (const auto& P : coupon_basis(mid, 4)) {
                    Diagram dg = psi_element_curve(d, P, cla, cmu);
                    Operator op = eval_diagram(dg, SchurVariant::seminilpotent);
                    CHECK(boundary_eq(op.source, Boundary(cla)));
                    CHECK(boundary_eq(op.target, Boundary(cmu)));
                    ops.push_back(std::move(op));
                    ++expected;
                }
            }
            RankResult rk = operator_rank(ops, 8);
            INFO(ccomp_str(cla), " -> ", ccomp_str(cmu));
            CHECK(rk.rank == expected);
            CHECK(rk.full);
        }
}

TEST_CASE("independence reports") {
    // a single idempotent is independent of rank 1
    IComposition a{delta()};
    auto data = coloured_cosets(a, a);
    SigPtr sig = boundary_sig(Boundary(a));
    std::vector<Diagram> one{psi_element(data[0], Poly::constant(sig, Scalar(1)), a, a)};
    auto rep1 = independence_report(one, SchurVariant::seminilpotent, 4);
    CHECK(rep1.rank == 1);
    CHECK(rep1.independent);
    CHECK(rep1.verdict.find("independent") == 0);

    // distinct coupon degrees separate psi_e^1 and psi_e^{u1+v1}
    Poly u1v1 = Poly::variable(sig, "u", 1) + Poly::variable(sig, "v", 1);
    std::vector<Diagram> two{psi_element(data[0], Poly::constant(sig, Scalar(1)), a, a),
                             psi_element(data[0], u1v1, a, a)};
    auto rep2 = independence_report(two, SchurVariant::seminilpotent, 2);
    CHECK(rep2.rank == 2);
    CHECK(rep2.independent);

    // all psi_w^P at (delta,delta) with coupons of degree <= 4
    IComposition dd{delta(), delta()};
    std::vector<Diagram> elems;
    for (const auto& d : coloured_cosets(dd, dd))
        for (const auto& P : boundary_basis(Boundary(d.beta_p), 4))
            elems.push_back(psi_element(d, P, dd, dd));
    auto rep3 = independence_report(elems, SchurVariant::seminilpotent, 6);
    CHECK(rep3.rank == static_cast<long>(elems.size()));
    CHECK(rep3.independent);

    // dependent sets are reported as not separated
    std::vector<Diagram> dup{one[0], one[0]};
    auto rep4 = independence_report(dup, SchurVariant::seminilpotent, 4);
    CHECK(!rep4.independent);
    CHECK(rep4.rank == 1);
    CHECK(rep4.verdict.find("not separated") == 0);
}
