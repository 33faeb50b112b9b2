#include "qschur/kronecker.hpp"

#include "qschur/demazure.hpp"

namespace qschur {

namespace {

struct Window {
    int uoff = 0;
    int voff = 0;
};

Window window_before(const IComposition& comp, int pos) {
    Window w;
    for (int t = 0; t + 1 < pos; ++t) {
        w.uoff += comp[t].n0;
        w.voff += comp[t].n1;
    }
    return w;
}

void check_pos(const IComposition& comp, int pos, int span) {
    if (pos < 1 || pos + span - 1 > static_cast<int>(comp.size()))
        throw BoundaryMismatch("block position " + std::to_string(pos) + " out of range in " +
                               icomp_str(comp));
}

// K1 = prod_{i<=a} prod_{b<j<=b+d} (u_i - v_j), K2 = prod_{a<i<=a+c} prod_{j<=b} (v_j - u_i),
// in window coordinates.
Poly k1_factor(const SigPtr& sig, Window w, int a, int b, int d) {
    Poly out = Poly::constant(sig, Scalar(1));
    for (int i = 1; i <= a; ++i)
        for (int j = b + 1; j <= b + d; ++j)
            out *= Poly::variable(sig, "u", w.uoff + i) - Poly::variable(sig, "v", w.voff + j);
    return out;
}

Poly k2_factor(const SigPtr& sig, Window w, int a, int b, int c) {
    Poly out = Poly::constant(sig, Scalar(1));
    for (int i = a + 1; i <= a + c; ++i)
        for (int j = 1; j <= b; ++j)
            out *= Poly::variable(sig, "v", w.voff + j) - Poly::variable(sig, "u", w.uoff + i);
    return out;
}

} // namespace

Operator kron_idem(SchurVariant v, const IComposition& beta) {
    Operator op = identity_op(Boundary(beta));
    op.variant = v;
    return op;
}

Operator kron_split(SchurVariant v, const IComposition& coarse, int pos, DimVec left, DimVec right) {
    check_pos(coarse, pos, 1);
    if (left.is_zero() || right.is_zero() || coarse[pos - 1] != left + right)
        throw BoundaryMismatch("split: block " + coarse[pos - 1].str() + " is not " + left.str() +
                               " + " + right.str());
    IComposition fine = coarse;
    fine[pos - 1] = left;
    fine.insert(fine.begin() + pos, right);

    Window w = window_before(coarse, pos);
    int a = left.n0, b = left.n1, c = right.n0, d = right.n1;
    SigPtr sig = boundary_sig(Boundary(coarse));

    Operator op;
    op.variant = v;
    op.source = coarse;
    op.target = fine;
    switch (v) {
        case SchurVariant::standard:
            op.degshift = 0;
            op.action = [](const Poly& P) { return P; };
            break;
        case SchurVariant::seminilpotent: {
            Poly K1 = k1_factor(sig, w, a, b, d);
            op.degshift = 2 * a * d;
            op.action = [K1](const Poly& P) { return K1 * P; };
            break;
        }
        case SchurVariant::nilpotent: {
            Poly K = k1_factor(sig, w, a, b, d) * k2_factor(sig, w, a, b, c);
            op.degshift = 2 * (a * d + b * c);
            op.action = [K](const Poly& P) { return K * P; };
            break;
        }
    }
    return op;
}

Operator kron_merge(SchurVariant v, const IComposition& fine, int pos) {
    check_pos(fine, pos, 2);
    DimVec L = fine[pos - 1], R = fine[pos];
    IComposition coarse = fine;
    coarse[pos - 1] = L + R;
    coarse.erase(coarse.begin() + pos);

    Window w = window_before(fine, pos);
    int a = L.n0, b = L.n1, c = R.n0, d = R.n1;
    SigPtr sig = boundary_sig(Boundary(fine));

    auto shuffles = [a, b, c, d, w](const Poly& P) {
        Poly out = demazure_shuffle(b, d, {"v"}, P, w.voff);
        return demazure_shuffle(a, c, {"u"}, out, w.uoff);
    };

    Operator op;
    op.variant = v;
    op.source = fine;
    op.target = coarse;
    switch (v) {
        case SchurVariant::standard: {
            Poly K = k1_factor(sig, w, a, b, d) * k2_factor(sig, w, a, b, c);
            Scalar sign(((a * d + b * c) % 2 == 0) ? 1 : -1);
            op.degshift = 2 * (a * d + b * c) - 2 * (a * c + b * d);
            op.action = [K, sign, shuffles](const Poly& P) { return shuffles(K * P) * sign; };
            break;
        }
        case SchurVariant::seminilpotent: {
            Poly K2 = k2_factor(sig, w, a, b, c);
            Scalar sign(((b * c) % 2 == 0) ? 1 : -1);
            op.degshift = 2 * b * c - 2 * (a * c + b * d);
            op.action = [K2, sign, shuffles](const Poly& P) { return shuffles(K2 * P) * sign; };
            break;
        }
        case SchurVariant::nilpotent:
            op.degshift = -2 * (a * c + b * d);
            op.action = shuffles;
            break;
    }
    return op;
}

Operator kron_coupon(SchurVariant v, const IComposition& beta, const Poly& P) {
    Boundary b(beta);
    if (!in_boundary_space(b, P))
        throw InvarianceViolation("coupon " + P.str() + " is not S_beta-invariant at " +
                                  icomp_str(beta));
    Operator op;
    op.variant = v;
    op.source = b;
    op.target = b;
    op.degshift = std::max(P.degree(), 0);
    op.action = [P](const Poly& Q) { return P * Q; };
    return op;
}

Operator kron_crossing(SchurVariant v, const IComposition& beta, int pos) {
    check_pos(beta, pos, 2);
    IComposition merged = beta;
    merged[pos - 1] = beta[pos - 1] + beta[pos];
    merged.erase(merged.begin() + pos);
    return compose(kron_split(v, merged, pos, beta[pos], beta[pos - 1]), kron_merge(v, beta, pos));
}

Operator kron_multi_split(SchurVariant v, const IComposition& beta, const IComposition& gamma) {
    if (!irefines(gamma, beta)) throw BoundaryMismatch(icomp_str(gamma) + " does not refine " + icomp_str(beta));
    Operator op = kron_idem(v, beta);
    IComposition cur = beta;
    size_t gi = 0;
    for (size_t bi = 0; bi < beta.size(); ++bi) {
        // Peel gamma-blocks off the front of beta-block bi, left to right.
        DimVec remaining = beta[bi];
        size_t pos = gi; // current index of the unsplit remainder within cur
        while (gamma[gi] != remaining) {
            DimVec first = gamma[gi];
            op = compose(kron_split(v, cur, static_cast<int>(pos) + 1, first, remaining - first), op);
            cur[pos] = first;
            cur.insert(cur.begin() + pos + 1, remaining - first);
            remaining = remaining - first;
            ++gi;
            ++pos;
        }
        ++gi;
    }
    return op;
}

Operator kron_multi_merge(SchurVariant v, const IComposition& gamma, const IComposition& beta) {
    if (!irefines(gamma, beta)) throw BoundaryMismatch(icomp_str(gamma) + " does not refine " + icomp_str(beta));
    Operator op = kron_idem(v, gamma);
    IComposition cur = gamma;
    size_t pos = 0;
    for (size_t bi = 0; bi < beta.size(); ++bi) {
        DimVec acc = cur[pos];
        while (acc != beta[bi]) {
            op = compose(kron_merge(v, cur, static_cast<int>(pos) + 1), op);
            acc = acc + cur[pos + 1];
            cur[pos] = acc;
            cur.erase(cur.begin() + pos + 1);
        }
        ++pos;
    }
    return op;
}

} // namespace qschur
