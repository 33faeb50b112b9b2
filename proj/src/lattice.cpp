#include "qschur/lattice.hpp"

#include <algorithm>

namespace qschur {

namespace {

// Index of the row with the smallest nonzero |entry| in the column, at or
// below `from`; -1 if the column is zero there.
int pick_pivot(const IntMat& m, size_t from, size_t col) {
    int best = -1;
    for (size_t i = from; i < m.size(); ++i) {
        if (m[i][col] == 0) continue;
        if (best < 0 || cmp(abs(m[i][col]), abs(m[static_cast<size_t>(best)][col])) < 0)
            best = static_cast<int>(i);
    }
    return best;
}

} // namespace

IntMat hermite_normal_form(IntMat rows) {
    if (rows.empty()) return rows;
    size_t ncols = rows[0].size();
    size_t r = 0;
    for (size_t col = 0; col < ncols && r < rows.size(); ++col) {
        // Euclid down the column until a single nonzero entry remains.
        for (;;) {
            int p = pick_pivot(rows, r, col);
            if (p < 0) break;
            std::swap(rows[r], rows[static_cast<size_t>(p)]);
            bool clean = true;
            for (size_t i = r + 1; i < rows.size(); ++i) {
                if (rows[i][col] == 0) continue;
                Int q = rows[i][col] / rows[r][col]; // truncated division
                if (q != 0)
                    for (size_t j = col; j < ncols; ++j) rows[i][j] -= q * rows[r][j];
                if (rows[i][col] != 0) clean = false;
            }
            if (clean) break;
        }
        if (rows[r][col] == 0) continue;
        if (rows[r][col] < 0)
            for (size_t j = col; j < ncols; ++j) rows[r][j] = -rows[r][j];
        // Reduce the rows above into the canonical range [0, pivot).
        for (size_t i = 0; i < r; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(), rows[r][col].get_mpz_t());
            if (q != 0)
                for (size_t j = 0; j < ncols; ++j) rows[i][j] -= q * rows[r][j];
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

int int_rank(IntMat rows) { return static_cast<int>(hermite_normal_form(std::move(rows)).size()); }

std::vector<Int> smith_divisors(IntMat m) {
    std::vector<Int> out;
    size_t t = 0;
    while (t < m.size() && t < (m.empty() ? 0 : m[0].size())) {
        // Find a nonzero entry in the remaining block.
        size_t bi = t, bj = t;
        bool found = false;
        Int best;
        for (size_t i = t; i < m.size(); ++i)
            for (size_t j = t; j < m[0].size(); ++j)
                if (m[i][j] != 0 && (!found || cmp(abs(m[i][j]), best) < 0)) {
                    best = abs(m[i][j]);
                    bi = i;
                    bj = j;
                    found = true;
                }
        if (!found) break;
        std::swap(m[t], m[bi]);
        for (auto& row : m) std::swap(row[t], row[bj]);
        bool again = false;
        for (size_t i = t + 1; i < m.size(); ++i)
            if (m[i][t] != 0) {
                Int q = m[i][t] / m[t][t];
                for (size_t j = t; j < m[0].size(); ++j) m[i][j] -= q * m[t][j];
                if (m[i][t] != 0) again = true;
            }
        for (size_t j = t + 1; j < m[0].size(); ++j)
            if (m[t][j] != 0) {
                Int q = m[t][j] / m[t][t];
                for (size_t i = t; i < m.size(); ++i) m[i][j] -= q * m[i][t];
                if (m[t][j] != 0) again = true;
            }
        if (again) continue;
        // Divisibility fix-up: fold any non-multiple into the pivot block.
        bool bad = false;
        for (size_t i = t + 1; i < m.size() && !bad; ++i)
            for (size_t j = t + 1; j < m[0].size() && !bad; ++j)
                if (m[i][j] % m[t][t] != 0) {
                    for (size_t k = t; k < m[0].size(); ++k) m[t][k] += m[i][k];
                    bad = true;
                }
        if (bad) continue;
        out.push_back(abs(m[t][t]));
        ++t;
    }
    // Normalize into a divisor chain (the loop already ensures divisibility).
    std::vector<Int> nontrivial;
    for (const auto& d : out)
        if (d > 1) nontrivial.push_back(d);
    return nontrivial;
}

bool hnf_member(const IntMat& hnf, std::vector<Int> v) {
    for (const auto& row : hnf) {
        size_t pivot = 0;
        while (pivot < row.size() && row[pivot] == 0) ++pivot;
        if (pivot == row.size()) continue;
        if (v[pivot] == 0) continue;
        if (v[pivot] % row[pivot] != 0) return false;
        Int q = v[pivot] / row[pivot];
        for (size_t j = pivot; j < v.size(); ++j) v[j] -= q * row[j];
    }
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

const std::vector<Monomial>& GradedLattice::columns_for(int degree) const {
    auto it = columns_.find(degree);
    if (it != columns_.end()) return it->second;
    SigPtr sig = make_signature({{"x", n_, VarKind::ordinary}, {"c", n_, VarKind::square_zero}});
    std::vector<Monomial> cols;
    for (const auto& p : monomial_basis(sig, degree)) {
        const auto& m = p.terms().begin()->first;
        if (2 * m.halfdeg == degree) cols.push_back(m);
    }
    return columns_.emplace(degree, std::move(cols)).first->second;
}

const std::vector<Monomial>& GradedLattice::columns(int degree) const { return columns_for(degree); }

std::vector<Int> GradedLattice::row_of(const Poly& P, int degree) const {
    const auto& cols = columns_for(degree);
    std::vector<Int> row(cols.size(), 0);
    for (size_t j = 0; j < cols.size(); ++j) row[j] = P.coeff(cols[j]).as_int();
    return row;
}

void GradedLattice::add_generator(const Poly& P) {
    if (P.is_zero()) return;
    if (!P.is_homogeneous()) throw Error("lattice generators must be homogeneous");
    int d = P.degree();
    if (d > maxdeg_) return;
    pieces_[d].push_back(row_of(P, d));
    reduced_[d] = false;
}

void GradedLattice::reduce() {
    for (auto& [d, rows] : pieces_)
        if (!reduced_[d]) {
            rows = hermite_normal_form(std::move(rows));
            reduced_[d] = true;
        }
}

bool GradedLattice::member(const Poly& P) const {
    if (P.is_zero()) return true;
    if (!P.is_homogeneous()) throw Error("membership is per homogeneous degree");
    int d = P.degree();
    if (d > maxdeg_) throw Error("degree out of range");
    auto it = pieces_.find(d);
    if (it == pieces_.end()) return false;
    if (!reduced_.at(d)) throw Error("lattice not reduced");
    return hnf_member(it->second, row_of(P, d));
}

int GradedLattice::rank(int degree) const {
    auto it = pieces_.find(degree);
    return it == pieces_.end() ? 0 : static_cast<int>(it->second.size());
}

const IntMat& GradedLattice::piece(int degree) const {
    static const IntMat empty;
    auto it = pieces_.find(degree);
    return it == pieces_.end() ? empty : it->second;
}

namespace {

Poly elementary_symmetric(const SigPtr& sig, const std::string& fam, int n, int k, int offset = 0) {
    // e_k(x_{offset+1..offset+n})
    Poly out = Poly::zero(sig);
    std::vector<int> idx(k);
    // iterate over k-subsets of [1..n]
    for (int i = 0; i < k; ++i) idx[i] = i;
    if (k == 0) return Poly::constant(sig, Scalar(1));
    for (;;) {
        Poly term = Poly::constant(sig, Scalar(1));
        for (int i : idx) term *= Poly::variable(sig, fam, offset + i + 1);
        out += term;
        int t = k - 1;
        while (t >= 0 && idx[t] == n - k + t) --t;
        if (t < 0) break;
        ++idx[t];
        for (int s = t + 1; s < k; ++s) idx[s] = idx[s - 1] + 1;
    }
    return out;
}

// Products of elementary symmetrics of degree <= bound, deterministic.
void lambda_products(const SigPtr& sig, int n, int bound, int k, Poly cur, int curdeg,
                     std::vector<Poly>& out) {
    if (k > n) {
        out.push_back(cur);
        return;
    }
    Poly ek = elementary_symmetric(sig, "x", n, k);
    for (int pow = 0;; ++pow) {
        if (curdeg + 2 * k * pow > bound) break;
        Poly next = cur;
        for (int t = 0; t < pow; ++t) next *= ek;
        lambda_products(sig, n, bound, k + 1, next, curdeg + 2 * k * pow, out);
    }
}

// Basis polynomials of the degree <= D part of the lattice, as elements of
// the n-variable model ring.
std::vector<Poly> lattice_polys(const GradedLattice& L, const SigPtr& sig, int D) {
    std::vector<Poly> out;
    for (int d = 0; d <= D; d += 2)
        for (const auto& r : L.piece(d)) {
            Poly p = Poly::zero(sig);
            const auto& cols = L.columns(d);
            for (size_t j = 0; j < cols.size(); ++j) p.add_term(cols[j], Scalar(r[j]));
            out.push_back(std::move(p));
        }
    return out;
}

} // namespace

// The model lattice is generated over Lambda by the unit together with the
// pushforwards from every proper flag space, each graded piece modeled
// recursively: a factor of thickness k contributes its own lattice. Full
// flags alone fall short: at n = 3 their image only reaches 2(c1+c2+c3)
// in degree 2, while the partial merge from (2,1) produces the honest
// divisor class c1+c2+c3.
GradedLattice torsion_lattice(int n, int D) {
    static std::map<std::pair<int, int>, GradedLattice> cache;
    auto key = std::make_pair(n, D);
    auto hit = cache.find(key);
    if (hit != cache.end()) return hit->second;

    GradedLattice L(n, D);
    SigPtr sig = boundary_sig(Boundary(ColouredComposition{{n, Colour::tau}}));
    std::vector<Poly> raw{Poly::constant(sig, Scalar(1))};
    if (n == 1) {
        for (const auto& m : monomial_basis(sig, D)) raw.push_back(m);
    } else {
        for (const auto& lambda : all_compositions(n)) {
            if (lambda.size() < 2) continue;
            ColouredComposition blocks;
            for (int b : lambda) blocks.push_back({b, Colour::tau});
            Operator M = curve_multi_merge(blocks, ColouredComposition{{n, Colour::tau}});
            // tensor products of the factors' lattice bases, shifted into windows
            std::vector<Poly> inputs{Poly::constant(sig, Scalar(1))};
            int offset = 0;
            for (int b : lambda) {
                SigPtr bsig =
                    make_signature({{"x", b, VarKind::ordinary}, {"c", b, VarKind::square_zero}});
                GradedLattice Lb = torsion_lattice(b, D);
                std::vector<std::vector<Poly>> images(2);
                for (int i = 1; i <= b; ++i) {
                    images[static_cast<size_t>(bsig->family_index("x"))].push_back(
                        Poly::variable(sig, "x", offset + i));
                    images[static_cast<size_t>(bsig->family_index("c"))].push_back(
                        Poly::variable(sig, "c", offset + i));
                }
                std::vector<Poly> next;
                for (const auto& factor : lattice_polys(Lb, bsig, D)) {
                    Poly shifted = substitute(factor, sig, images);
                    for (const auto& prev : inputs) {
                        Poly prod = prev * shifted;
                        if (prod.degree() <= D) next.push_back(std::move(prod));
                    }
                }
                inputs = std::move(next);
                offset += b;
            }
            for (const auto& P : inputs) raw.push_back(apply(M, P));
        }
    }
    std::vector<Poly> lams;
    lambda_products(sig, n, D, 1, Poly::constant(sig, Scalar(1)), 0, lams);
    for (const auto& g : raw) {
        if (g.is_zero()) continue;
        for (const auto& e : lams) {
            Poly gen = e * g;
            for (int d = 0; d <= D; d += 2) {
                Poly comp = gen.component(d);
                if (!comp.is_zero()) L.add_generator(comp);
            }
        }
    }
    L.reduce();
    cache.emplace(key, L);
    return L;
}

Poly phi_tilde(const Poly& P) {
    const RingSignature& sig = *P.sig();
    int fu = sig.family_index("u"), fv = sig.family_index("v");
    if (fu < 0 || fv < 0) throw Error("phi_tilde expects the u,v ring");
    int n = sig.family(fu).count;
    if (sig.family(fv).count != n) throw Error("phi_tilde needs equal u and v counts");
    SigPtr target = boundary_sig(Boundary(ColouredComposition{{n, Colour::tau}}));
    std::vector<std::vector<Poly>> images(sig.families().size());
    for (int i = 1; i <= n; ++i) {
        images[fu].push_back(Poly::variable(target, "x", i));
        images[fv].push_back(Poly::variable(target, "x", i) + Poly::variable(target, "c", i));
    }
    return substitute(P, target, images);
}

std::vector<PhiCompareRow> compare_phi_image(int n, int D) {
    GradedLattice lat = torsion_lattice(n, D);
    GradedLattice phi(n, D);
    SigPtr uv = make_signature({{"u", n, VarKind::ordinary}, {"v", n, VarKind::ordinary}});
    Composition full{n};
    SymmetryGroup bisym{{{"u"}, full}, {{"v"}, full}};
    for (const auto& b : invariant_basis(uv, bisym, D)) phi.add_generator(phi_tilde(b));
    phi.reduce();

    SigPtr sig = boundary_sig(Boundary(ColouredComposition{{n, Colour::tau}}));
    SymmetryGroup diag{{{"x", "c"}, full}};
    std::vector<Poly> inv = invariant_basis(sig, diag, D);

    std::vector<PhiCompareRow> out;
    for (int d = 0; d <= D; d += 2) {
        PhiCompareRow row;
        row.degree = d;
        row.rank_lattice = lat.rank(d);
        row.rank_phi = phi.rank(d);
        // Ambient invariants of this degree.
        std::vector<Poly> inv_d;
        for (const auto& p : inv)
            if (p.degree() == d) inv_d.push_back(p);
        row.rank_invariants = static_cast<int>(inv_d.size());
        // Equality by two-sided HNF membership.
        bool eq = lat.rank(d) == phi.rank(d);
        if (eq)
            for (const auto& r : lat.piece(d)) {
                Poly p = Poly::zero(sig);
                const auto& cols = lat.columns(d);
                for (size_t j = 0; j < cols.size(); ++j)
                    p.add_term(cols[j], Scalar(r[j]));
                if (!phi.member(p)) {
                    eq = false;
                    break;
                }
            }
        if (eq)
            for (const auto& r : phi.piece(d)) {
                Poly p = Poly::zero(sig);
                const auto& cols = phi.columns(d);
                for (size_t j = 0; j < cols.size(); ++j)
                    p.add_term(cols[j], Scalar(r[j]));
                if (!lat.member(p)) {
                    eq = false;
                    break;
                }
            }
        row.equal = eq;
        // Elementary divisors of invariants / lattice: express lattice rows in
        // the orbit-sum coordinates (orbit supports are disjoint).
        IntMat coords;
        for (const auto& r : lat.piece(d)) {
            Poly p = Poly::zero(sig);
            const auto& cols = lat.columns(d);
            for (size_t j = 0; j < cols.size(); ++j) p.add_term(cols[j], Scalar(r[j]));
            std::vector<Int> c(inv_d.size(), 0);
            for (size_t t = 0; t < inv_d.size(); ++t) {
                const Monomial& rep = inv_d[t].terms().begin()->first;
                c[t] = p.coeff(rep).as_int();
            }
            coords.push_back(std::move(c));
        }
        row.divisors = smith_divisors(std::move(coords));
        out.push_back(std::move(row));
    }
    return out;
}

std::vector<Poly> coupon_basis(const ColouredComposition& cl, int maxdeg, bool over_Q) {
    SigPtr sig = boundary_sig(Boundary(cl));
    int n = ccomp_sum(cl);
    // Per-block bases in global coordinates.
    std::vector<std::vector<Poly>> block_bases;
    int offset = 0;
    for (const auto& blk : cl) {
        int m = blk.size;
        std::vector<Poly> basis;
        if (blk.colour == Colour::eps || over_Q) {
            SigPtr bsig = make_signature({{"x", m, VarKind::ordinary}, {"c", m, VarKind::square_zero}});
            SymmetryGroup g{{{"x", "c"}, Composition{m}}};
            for (const auto& p : invariant_basis(bsig, g, maxdeg)) {
                if (blk.colour == Colour::eps) {
                    bool has_c = false;
                    int cf = bsig->family_index("c");
                    for (const auto& [mono, coef] : p.terms())
                        for (int i = 0; i < m; ++i)
                            if (mono.e[bsig->slot(cf, i)] > 0) has_c = true;
                    if (has_c) continue;
                }
                basis.push_back(p);
            }
            // shift into the window
            std::vector<Poly> shifted;
            std::vector<std::vector<Poly>> images(2);
            for (int i = 1; i <= m; ++i) {
                images[static_cast<size_t>(bsig->family_index("x"))].push_back(
                    Poly::variable(sig, "x", offset + i));
                images[static_cast<size_t>(bsig->family_index("c"))].push_back(
                    Poly::variable(sig, "c", offset + i));
            }
            for (const auto& p : basis) shifted.push_back(substitute(p, sig, images));
            basis = std::move(shifted);
        } else {
            GradedLattice L = torsion_lattice(m, maxdeg);
            SigPtr bsig = make_signature({{"x", m, VarKind::ordinary}, {"c", m, VarKind::square_zero}});
            std::vector<std::vector<Poly>> images(2);
            for (int i = 1; i <= m; ++i) {
                images[static_cast<size_t>(bsig->family_index("x"))].push_back(
                    Poly::variable(sig, "x", offset + i));
                images[static_cast<size_t>(bsig->family_index("c"))].push_back(
                    Poly::variable(sig, "c", offset + i));
            }
            for (int d = 0; d <= maxdeg; d += 2)
                for (const auto& r : L.piece(d)) {
                    Poly p = Poly::zero(bsig);
                    const auto& cols = L.columns(d);
                    for (size_t j = 0; j < cols.size(); ++j) p.add_term(cols[j], Scalar(r[j]));
                    basis.push_back(substitute(p, sig, images));
                }
        }
        block_bases.push_back(std::move(basis));
        offset += m;
    }
    (void)n;
    // All products with total degree <= maxdeg.
    std::vector<Poly> out{Poly::constant(sig, Scalar(1))};
    std::vector<int> degs{0};
    for (const auto& bb : block_bases) {
        std::vector<Poly> next;
        std::vector<int> ndegs;
        for (size_t i = 0; i < out.size(); ++i)
            for (const auto& q : bb) {
                int d = degs[i] + std::max(q.degree(), 0);
                if (d > maxdeg) continue;
                next.push_back(out[i] * q);
                ndegs.push_back(d);
            }
        out = std::move(next);
        degs = std::move(ndegs);
    }
    return out;
}

} // namespace qschur
