#include "qschur/operator.hpp"

#include <map>

namespace qschur {

std::string variant_str(SchurVariant v) {
    switch (v) {
        case SchurVariant::standard: return "s";
        case SchurVariant::seminilpotent: return "m";
        case SchurVariant::nilpotent: return "n";
    }
    return "?";
}

bool boundary_eq(const Boundary& a, const Boundary& b) {
    if (a.index() != b.index()) return false;
    if (std::holds_alternative<IComposition>(a))
        return std::get<IComposition>(a) == std::get<IComposition>(b);
    return std::get<ColouredComposition>(a) == std::get<ColouredComposition>(b);
}

std::string boundary_str(const Boundary& b) {
    if (std::holds_alternative<IComposition>(b)) return icomp_str(std::get<IComposition>(b));
    return ccomp_str(std::get<ColouredComposition>(b));
}

namespace {

SigPtr cached_kronecker_sig(const DimVec& total) {
    static std::map<std::pair<int, int>, SigPtr> cache;
    auto key = std::make_pair(total.n0, total.n1);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    SigPtr sig = make_signature({{"u", total.n0, VarKind::ordinary}, {"v", total.n1, VarKind::ordinary}});
    cache[key] = sig;
    return sig;
}

SigPtr cached_curve_sig(int n) {
    static std::map<int, SigPtr> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    SigPtr sig = make_signature({{"x", n, VarKind::ordinary}, {"c", n, VarKind::square_zero}});
    cache[n] = sig;
    return sig;
}

Composition drop_zeros(const std::vector<int>& v) {
    Composition out;
    for (int x : v)
        if (x > 0) out.push_back(x);
    return out;
}

} // namespace

SigPtr boundary_sig(const Boundary& b) {
    if (std::holds_alternative<IComposition>(b))
        return cached_kronecker_sig(icomp_sum(std::get<IComposition>(b)));
    return cached_curve_sig(ccomp_sum(std::get<ColouredComposition>(b)));
}

SymmetryGroup boundary_group(const Boundary& b) {
    if (std::holds_alternative<IComposition>(b)) {
        const auto& beta = std::get<IComposition>(b);
        std::vector<int> c0, c1;
        for (const auto& v : beta) {
            c0.push_back(v.n0);
            c1.push_back(v.n1);
        }
        return {{{"u"}, drop_zeros(c0)}, {{"v"}, drop_zeros(c1)}};
    }
    const auto& cl = std::get<ColouredComposition>(b);
    return {{{"x", "c"}, ccomp_underlying(cl)}};
}

namespace {

// Indices (1-based) of variables sitting in epsilon blocks.
std::vector<int> eps_indices(const ColouredComposition& cl) {
    std::vector<int> out;
    int pos = 0;
    for (const auto& blk : cl) {
        if (blk.colour == Colour::eps)
            for (int i = 1; i <= blk.size; ++i) out.push_back(pos + i);
        pos += blk.size;
    }
    return out;
}

bool touches_eps_c(const RingSignature& sig, const Poly& P, const std::vector<int>& eps) {
    int cf = sig.family_index("c");
    for (const auto& [m, coeff] : P.terms())
        for (int i : eps)
            if (m.e[sig.slot(cf, i - 1)] > 0) return true;
    return false;
}

} // namespace

std::vector<Poly> boundary_basis(const Boundary& b, int maxdeg) {
    SigPtr sig = boundary_sig(b);
    auto basis = invariant_basis(sig, boundary_group(b), maxdeg);
    if (std::holds_alternative<ColouredComposition>(b)) {
        const auto& cl = std::get<ColouredComposition>(b);
        auto eps = eps_indices(cl);
        if (!eps.empty()) {
            std::vector<Poly> kept;
            for (auto& p : basis)
                if (!touches_eps_c(*sig, p, eps)) kept.push_back(std::move(p));
            return kept;
        }
    }
    return basis;
}

bool in_boundary_space(const Boundary& b, const Poly& P) {
    if (!(*P.sig() == *boundary_sig(b))) return false;
    if (std::holds_alternative<ColouredComposition>(b)) {
        const auto& cl = std::get<ColouredComposition>(b);
        if (touches_eps_c(*P.sig(), P, eps_indices(cl))) return false;
    }
    return is_invariant(P, boundary_group(b));
}

Poly apply(const Operator& f, const Poly& P) {
    if (!(*P.sig() == *boundary_sig(f.source)))
        throw BoundaryMismatch("applying operator with source " + boundary_str(f.source) +
                               " to a polynomial in a different ring");
    return f.action(P);
}

Operator compose(const Operator& f, const Operator& g) {
    if (!boundary_eq(f.source, g.target))
        throw BoundaryMismatch("compose: " + boundary_str(f.source) + " vs " +
                               boundary_str(g.target));
    if (f.variant && g.variant && *f.variant != *g.variant)
        throw Error("compose: mixed Schur variants");
    Operator h;
    h.variant = f.variant ? f.variant : g.variant;
    h.source = g.source;
    h.target = f.target;
    h.degshift = f.degshift + g.degshift;
    auto fa = f.action, ga = g.action;
    h.action = [fa, ga](const Poly& P) { return fa(ga(P)); };
    return h;
}

Operator identity_op(const Boundary& b) {
    Operator op;
    op.source = b;
    op.target = b;
    op.degshift = 0;
    op.action = [](const Poly& P) { return P; };
    return op;
}

bool equal_up_to_degree(const Operator& f, const Operator& g, int D) {
    return !first_difference(f, g, D).has_value();
}

std::optional<Poly> first_difference(const Operator& f, const Operator& g, int D) {
    if (!boundary_eq(f.source, g.source) || !boundary_eq(f.target, g.target))
        throw BoundaryMismatch("comparing operators with different boundaries");
    for (const auto& P : boundary_basis(f.source, D))
        if (!(f.action(P) == g.action(P))) return P;
    return std::nullopt;
}

} // namespace qschur
