#include "qschur/permcomb.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qschur {

Permutation::Permutation(std::vector<int> img) : img_(std::move(img)) {
    std::vector<char> seen(img_.size(), 0);
    for (int v : img_) {
        if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
            throw Error("invalid one-line permutation");
        seen[v] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    return Permutation(std::move(img));
}

Permutation Permutation::adjacent(int n, int r) {
    if (r < 1 || r >= n) throw Error("adjacent transposition index out of range");
    Permutation p = identity(n);
    std::swap(p.img_[r - 1], p.img_[r]);
    return p;
}

Permutation Permutation::from_one_line(const std::vector<int>& line) {
    std::vector<int> img(line.size());
    for (size_t i = 0; i < line.size(); ++i) img[i] = line[i] - 1;
    return Permutation(std::move(img));
}

Permutation Permutation::operator*(const Permutation& o) const {
    if (size() != o.size()) throw Error("composing permutations of different sizes");
    std::vector<int> img(size());
    for (int i = 0; i < size(); ++i) img[i] = img_[o.img_[i]];
    return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<int> img(size());
    for (int i = 0; i < size(); ++i) img[img_[i]] = i;
    return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
    for (int i = 0; i < size(); ++i)
        if (img_[i] != i) return false;
    return true;
}

int Permutation::length() const {
    int inv = 0;
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j)
            if (img_[i] > img_[j]) ++inv;
    return inv;
}

Permutation Permutation::embed(int m, int offset) const {
    if (offset < 0 || offset + size() > m) throw Error("embed window out of range");
    Permutation p = identity(m);
    for (int i = 0; i < size(); ++i) p.img_[offset + i] = offset + img_[i];
    return p;
}

std::vector<int> Permutation::reduced_word() const {
    // Repeatedly right-multiply by s_i at the first descent; the collected
    // indices reversed give a reduced word for w.
    std::vector<int> v = img_;
    std::vector<int> picks;
    for (;;) {
        int d = -1;
        for (size_t i = 0; i + 1 < v.size(); ++i)
            if (v[i] > v[i + 1]) {
                d = static_cast<int>(i);
                break;
            }
        if (d < 0) break;
        std::swap(v[d], v[d + 1]);
        picks.push_back(d + 1);
    }
    std::reverse(picks.begin(), picks.end());
    return picks;
}

std::vector<int> Permutation::one_line() const {
    std::vector<int> line(img_.size());
    for (size_t i = 0; i < img_.size(); ++i) line[i] = img_[i] + 1;
    return line;
}

std::string Permutation::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < size(); ++i) os << (i ? "," : "") << img_[i] + 1;
    os << "]";
    return os.str();
}

int comp_sum(const Composition& c) { return std::accumulate(c.begin(), c.end(), 0); }

std::string comp_str(const Composition& c) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << ")";
    return os.str();
}

bool refines(const Composition& mu, const Composition& lambda) {
    if (comp_sum(mu) != comp_sum(lambda)) throw Error("refines: different totals");
    size_t j = 0;
    for (int block : lambda) {
        int acc = 0;
        while (acc < block) {
            if (j >= mu.size()) return false;
            acc += mu[j++];
        }
        if (acc != block) return false;
    }
    return j == mu.size();
}

std::string DimVec::str() const {
    // Multiples of the basis vectors and of delta get short names.
    std::ostringstream os;
    auto coef = [&os](int k) {
        if (k != 1) os << k;
    };
    if (n0 == n1) {
        coef(n0);
        os << "d";
    } else if (n1 == 0) {
        coef(n0);
        os << "a0";
    } else if (n0 == 0) {
        coef(n1);
        os << "a1";
    } else {
        os << "(" << n0 << "," << n1 << ")";
    }
    return os.str();
}

DimVec icomp_sum(const IComposition& b) {
    DimVec s;
    for (const auto& v : b) s = s + v;
    return s;
}

std::string icomp_str(const IComposition& b) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << b[i].str();
    os << ")";
    return os.str();
}

bool irefines(const IComposition& mu, const IComposition& lambda) {
    if (!(icomp_sum(mu) == icomp_sum(lambda))) throw Error("irefines: different totals");
    size_t j = 0;
    for (const auto& block : lambda) {
        DimVec acc;
        while (acc != block) {
            if (j >= mu.size()) return false;
            acc = acc + mu[j++];
            if (acc.n0 > block.n0 || acc.n1 > block.n1) return false;
        }
    }
    return j == mu.size();
}

int ccomp_sum(const ColouredComposition& c) {
    int s = 0;
    for (const auto& b : c) s += b.size;
    return s;
}

std::string ccomp_str(const ColouredComposition& c) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < c.size(); ++i)
        os << (i ? "," : "") << c[i].size << (c[i].colour == Colour::tau ? "t" : "e");
    os << ")";
    return os.str();
}

Composition ccomp_underlying(const ColouredComposition& c) {
    Composition out;
    for (const auto& b : c) out.push_back(b.size);
    return out;
}

IComposition ccomp_to_icomp(const ColouredComposition& c) {
    IComposition out;
    for (const auto& b : c) {
        if (b.colour == Colour::eps) {
            out.push_back(delta() * b.size);
        } else {
            out.push_back(alpha0() * b.size);
            out.push_back(alpha1() * b.size);
        }
    }
    return out;
}

namespace {

// All nonnegative matrices with given row and column sums, flattened
// row-major, in descending lexicographic order.
void tables_rec(const std::vector<int>& rows, const std::vector<int>& cols, size_t i, size_t j,
                std::vector<int> rowleft, std::vector<int> colleft,
                std::vector<std::vector<int>>& cur, std::vector<std::vector<std::vector<int>>>& out) {
    if (i == rows.size()) {
        out.push_back(cur);
        return;
    }
    if (j == cols.size()) {
        if (rowleft[i] != 0) return;
        tables_rec(rows, cols, i + 1, 0, rowleft, colleft, cur, out);
        return;
    }
    int hi = std::min(rowleft[i], colleft[j]);
    for (int a = hi; a >= 0; --a) {
        cur[i][j] = a;
        rowleft[i] -= a;
        colleft[j] -= a;
        tables_rec(rows, cols, i, j + 1, rowleft, colleft, cur, out);
        rowleft[i] += a;
        colleft[j] += a;
        cur[i][j] = 0;
    }
}

std::vector<std::vector<std::vector<int>>> contingency_tables(const std::vector<int>& rows,
                                                              const std::vector<int>& cols) {
    std::vector<std::vector<int>> cur(rows.size(), std::vector<int>(cols.size(), 0));
    std::vector<std::vector<std::vector<int>>> out;
    tables_rec(rows, cols, 0, 0, rows, cols, cur, out);
    return out;
}

// Minimal-length representative of the double coset determined by the table:
// cell (i,j) maps the corresponding sub-run of mu-block j order-preservingly
// onto the sub-run of lambda-block i.
Permutation coset_rep(const std::vector<int>& lambda, const std::vector<int>& mu,
                      const std::vector<std::vector<int>>& a) {
    int n = std::accumulate(lambda.begin(), lambda.end(), 0);
    std::vector<int> lstart(lambda.size()), mstart(mu.size());
    for (size_t i = 1; i < lambda.size(); ++i) lstart[i] = lstart[i - 1] + lambda[i - 1];
    for (size_t j = 1; j < mu.size(); ++j) mstart[j] = mstart[j - 1] + mu[j - 1];

    std::vector<int> img(n, -1);
    std::vector<int> lused(lambda.size(), 0), mused(mu.size(), 0);
    for (size_t i = 0; i < lambda.size(); ++i)
        for (size_t j = 0; j < mu.size(); ++j) {
            for (int t = 0; t < a[i][j]; ++t)
                img[mstart[j] + mused[j] + t] = lstart[i] + lused[i] + t;
            mused[j] += a[i][j];
            lused[i] += a[i][j];
        }
    return Permutation(std::move(img));
}

// Block permutation sending the row-major ordering of nonzero cells to the
// column-major ordering, plus both refinements, generic over the cell value type.
template <typename Cell, typename IsZero>
void cell_data(const std::vector<std::vector<Cell>>& a, IsZero is_zero, std::vector<Cell>& lambda_p,
               std::vector<Cell>& mu_p, Permutation& sigma) {
    size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    std::vector<std::vector<int>> rowpos(rows, std::vector<int>(cols, -1));
    int k = 0;
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j)
            if (!is_zero(a[i][j])) {
                rowpos[i][j] = k++;
                lambda_p.push_back(a[i][j]);
            }
    std::vector<int> img(k);
    int c = 0;
    for (size_t j = 0; j < cols; ++j)
        for (size_t i = 0; i < rows; ++i)
            if (!is_zero(a[i][j])) {
                mu_p.push_back(a[i][j]);
                img[rowpos[i][j]] = c++;
            }
    sigma = Permutation(std::move(img));
}

} // namespace

std::vector<CosetDatum> double_cosets(const Composition& lambda, const Composition& mu) {
    if (comp_sum(lambda) != comp_sum(mu)) throw Error("double_cosets: different totals");
    std::vector<CosetDatum> out;
    for (const auto& a : contingency_tables(lambda, mu)) {
        CosetDatum d;
        d.cells = a;
        d.w = coset_rep(lambda, mu, a);
        cell_data(a, [](int x) { return x == 0; }, d.lambda_p, d.mu_p, d.sigma);
        d.word = d.sigma.reduced_word();
        out.push_back(std::move(d));
    }
    return out;
}

std::vector<ColouredCosetDatum> coloured_cosets(const IComposition& beta, const IComposition& gamma) {
    if (!(icomp_sum(beta) == icomp_sum(gamma))) throw Error("coloured_cosets: different totals");
    std::vector<int> b0, b1, g0, g1;
    for (const auto& v : beta) {
        b0.push_back(v.n0);
        b1.push_back(v.n1);
    }
    for (const auto& v : gamma) {
        g0.push_back(v.n0);
        g1.push_back(v.n1);
    }
    auto t0 = contingency_tables(b0, g0);
    auto t1 = contingency_tables(b1, g1);
    std::vector<ColouredCosetDatum> out;
    for (const auto& a0 : t0)
        for (const auto& a1 : t1) {
            ColouredCosetDatum d;
            d.w0 = coset_rep(b0, g0, a0);
            d.w1 = coset_rep(b1, g1, a1);
            d.cells.assign(beta.size(), std::vector<DimVec>(gamma.size()));
            for (size_t i = 0; i < beta.size(); ++i)
                for (size_t j = 0; j < gamma.size(); ++j) d.cells[i][j] = {a0[i][j], a1[i][j]};
            cell_data(d.cells, [](const DimVec& v) { return v.is_zero(); }, d.beta_p, d.gamma_p,
                      d.sigma);
            d.word = d.sigma.reduced_word();
            out.push_back(std::move(d));
        }
    return out;
}

std::vector<Composition> all_compositions(int n) {
    std::vector<Composition> out;
    if (n == 0) {
        out.push_back({});
        return out;
    }
    for (int first = 1; first <= n; ++first)
        for (auto rest : all_compositions(n - first)) {
            Composition c{first};
            c.insert(c.end(), rest.begin(), rest.end());
            out.push_back(std::move(c));
        }
    return out;
}

std::vector<IComposition> all_icompositions(const DimVec& v) {
    std::vector<IComposition> out;
    if (v.is_zero()) {
        out.push_back({});
        return out;
    }
    for (int a0 = 0; a0 <= v.n0; ++a0)
        for (int a1 = 0; a1 <= v.n1; ++a1) {
            DimVec first{a0, a1};
            if (first.is_zero()) continue;
            for (auto rest : all_icompositions(v - first)) {
                IComposition c{first};
                c.insert(c.end(), rest.begin(), rest.end());
                out.push_back(std::move(c));
            }
        }
    return out;
}

namespace {
void partitions_rec(int n, int maxpart, Composition& cur, std::vector<Composition>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(n, maxpart); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(n - p, p, cur, out);
        cur.pop_back();
    }
}
} // namespace

std::vector<Composition> all_partitions(int n) {
    std::vector<Composition> out;
    Composition cur;
    partitions_rec(n, n, cur, out);
    return out;
}

} // namespace qschur
