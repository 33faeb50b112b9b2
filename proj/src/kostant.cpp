#include "qschur/kostant.hpp"

#include <algorithm>
#include <sstream>

namespace qschur {

DimVec MarkedRoot::vec() const {
    switch (kind) {
        case RootKind::real0: return {k + 1, k};
        case RootKind::real1: return {k, k + 1};
        case RootKind::imag: return {1, 1};
    }
    return {};
}

std::string MarkedRoot::str() const {
    std::ostringstream os;
    if (kind == RootKind::imag) {
        os << "d" << (marker == Marker::bullet ? "*" : marker == Marker::circ ? "o" : "");
        return os.str();
    }
    os << "a" << (kind == RootKind::real0 ? 0 : 1);
    if (k > 0) os << "+" << (k > 1 ? std::to_string(k) : "") << "d";
    return os.str();
}

MarkedRoot real_root(int i, int k) {
    MarkedRoot r;
    r.kind = i == 0 ? RootKind::real0 : RootKind::real1;
    r.k = k;
    return r;
}

MarkedRoot delta_bullet() { return {RootKind::imag, 0, Marker::bullet}; }
MarkedRoot delta_circ() { return {RootKind::imag, 0, Marker::circ}; }

Rat theta(const DimVec& v) {
    if (v.is_zero()) throw Error("theta of zero vector");
    Rat t(v.n1, v.n0 + v.n1);
    t.canonicalize();
    return t;
}

Rat theta_comp(const IComposition& beta, size_t lo, size_t hi) {
    DimVec s;
    for (size_t i = lo; i < hi; ++i) s = s + beta[i];
    return theta(s);
}

int root_chain_compare(const MarkedRoot& a, const MarkedRoot& b) {
    Rat ta = theta(a.vec()), tb = theta(b.vec());
    if (ta != tb) return ta < tb ? -1 : 1;
    // Both imaginary: circ < bullet. (Real roots of equal slope are equal.)
    if (a.kind == RootKind::imag && b.kind == RootKind::imag) {
        if (a.marker == b.marker) return 0;
        return a.marker == Marker::circ ? -1 : 1;
    }
    return 0;
}

DimVec MKPart::weight() const {
    DimVec w;
    for (const auto& [m, r] : parts) w = w + r.vec() * m;
    return w;
}

std::string MKPart::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) os << ",";
        if (parts[i].first != 1) os << parts[i].first;
        os << parts[i].second.str();
    }
    os << ")";
    return os.str();
}

int MKPart::delta_bullet_mult() const {
    for (const auto& [m, r] : parts)
        if (r.kind == RootKind::imag && r.marker == Marker::bullet) return m;
    return 0;
}

int MKPart::delta_circ_mult() const {
    for (const auto& [m, r] : parts)
        if (r.kind == RootKind::imag && r.marker == Marker::circ) return m;
    return 0;
}

namespace {

// Marked roots fitting inside v, in decreasing chain order.
std::vector<MarkedRoot> roots_below(const DimVec& v, bool marked) {
    std::vector<MarkedRoot> out;
    for (int k = 0;; ++k) { // alpha_1 + k delta, decreasing as k grows
        MarkedRoot r = real_root(1, k);
        if (r.vec().n0 > v.n0 || r.vec().n1 > v.n1) break;
        out.push_back(r);
    }
    if (v.n0 >= 1 && v.n1 >= 1) {
        if (marked) {
            out.push_back(delta_bullet());
            out.push_back(delta_circ());
        } else {
            out.push_back({RootKind::imag, 0, Marker::none});
        }
    }
    std::vector<MarkedRoot> tail;
    for (int k = 0;; ++k) { // alpha_0 + k delta, increasing as k grows
        MarkedRoot r = real_root(0, k);
        if (r.vec().n0 > v.n0 || r.vec().n1 > v.n1) break;
        tail.push_back(r);
    }
    std::reverse(tail.begin(), tail.end());
    out.insert(out.end(), tail.begin(), tail.end());
    return out;
}

void mkp_rec(const DimVec& rem, const std::vector<MarkedRoot>& roots, size_t from, MKPart& cur,
             std::vector<MKPart>& out) {
    if (rem.is_zero()) {
        out.push_back(cur);
        return;
    }
    for (size_t i = from; i < roots.size(); ++i) {
        DimVec rv = roots[i].vec();
        for (int mult = 1; rv.n0 * mult <= rem.n0 && rv.n1 * mult <= rem.n1; ++mult) {
            cur.parts.push_back({mult, roots[i]});
            mkp_rec(rem - rv * mult, roots, i + 1, cur, out);
            cur.parts.pop_back();
        }
    }
}

} // namespace

std::vector<MKPart> enumerate_mkp(const DimVec& v) {
    std::vector<MKPart> out;
    MKPart cur;
    if (v.n0 < 0 || v.n1 < 0) throw Error("negative dimension vector");
    mkp_rec(v, roots_below(v, true), 0, cur, out);
    return out;
}

std::vector<MKPart> enumerate_kp(const DimVec& v) {
    std::vector<MKPart> out;
    MKPart cur;
    if (v.n0 < 0 || v.n1 < 0) throw Error("negative dimension vector");
    mkp_rec(v, roots_below(v, false), 0, cur, out);
    return out;
}

int revlex_compare(const MKPart& a, const MKPart& b) {
    size_t n = std::min(a.parts.size(), b.parts.size());
    for (size_t t = 0; t < n; ++t) {
        const auto& [ia, ra] = a.parts[t];
        const auto& [ib, rb] = b.parts[t];
        int rc = root_chain_compare(ra, rb);
        if (rc != 0) return rc > 0 ? -1 : 1; // larger root first => smaller
        if (ia != ib) return ia > ib ? -1 : 1;
    }
    if (a.parts.size() != b.parts.size()) return a.parts.size() < b.parts.size() ? -1 : 1;
    return 0;
}

namespace {

// Partition comparison of the same flavour: first difference, larger entry
// means smaller.
int partition_compare(const Composition& a, const Composition& b) {
    size_t n = std::min(a.size(), b.size());
    for (size_t t = 0; t < n; ++t)
        if (a[t] != b[t]) return a[t] > b[t] ? -1 : 1;
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    return 0;
}

// Flag type of the unique flag on k copies of the real root alpha_i + m*delta:
// (k*delta,...,k*delta,k*alpha_1) resp. (k*alpha_0,k*delta,...,k*delta).
IComposition real_flag_type(const MarkedRoot& r, int k) {
    IComposition out;
    if (r.kind == RootKind::real1) {
        for (int t = 0; t < r.k; ++t) out.push_back(delta() * k);
        out.push_back(alpha1() * k);
    } else {
        out.push_back(alpha0() * k);
        for (int t = 0; t < r.k; ++t) out.push_back(delta() * k);
    }
    return out;
}

} // namespace

std::string PolyheredityIndex::str() const {
    std::ostringstream os;
    os << mkp.str();
    os << " " << (lambda.empty() ? "-" : comp_str(lambda));
    os << " " << (mu.empty() ? "-" : comp_str(mu));
    return os.str();
}

IComposition gamma_composition(const PolyheredityIndex& idx) {
    IComposition out;
    for (const auto& [mult, root] : idx.mkp.parts) {
        if (root.is_real()) {
            IComposition part = real_flag_type(root, mult);
            out.insert(out.end(), part.begin(), part.end());
        } else if (root.marker == Marker::bullet) {
            for (int p : idx.lambda) out.push_back(delta() * p);
        } else {
            for (int p : idx.mu) {
                out.push_back(alpha0() * p);
                out.push_back(alpha1() * p);
            }
        }
    }
    return out;
}

int index_compare(const PolyheredityIndex& a, const PolyheredityIndex& b) {
    int c = revlex_compare(a.mkp, b.mkp);
    if (c != 0) return c;
    c = partition_compare(a.lambda, b.lambda);
    if (c != 0) return c;
    return partition_compare(a.mu, b.mu);
}

bool is_noncuspidal(const IComposition& beta) {
    if (beta.empty()) throw Error("noncuspidality of an empty composition");
    for (size_t r = 1; r < beta.size(); ++r)
        if (theta_comp(beta, 0, r) > theta_comp(beta, r, beta.size())) return true;
    return false;
}

std::vector<std::pair<PolyheredityIndex, IComposition>> polyheredity_chain(const DimVec& v,
                                                                           bool restrict_imaginary) {
    std::vector<PolyheredityIndex> indices;
    for (const auto& mkp : enumerate_mkp(v)) {
        if (restrict_imaginary) {
            bool ok = true;
            for (const auto& [m, r] : mkp.parts)
                if (r.is_real()) ok = false;
            if (!ok) continue;
        }
        for (const auto& lam : all_partitions(mkp.delta_bullet_mult()))
            for (const auto& mu : all_partitions(mkp.delta_circ_mult()))
                indices.push_back({mkp, lam, mu});
    }
    std::sort(indices.begin(), indices.end(),
              [](const PolyheredityIndex& a, const PolyheredityIndex& b) {
                  return index_compare(a, b) < 0;
              });
    std::vector<std::pair<PolyheredityIndex, IComposition>> out;
    for (auto& idx : indices) {
        IComposition g = gamma_composition(idx);
        out.emplace_back(std::move(idx), std::move(g));
    }
    return out;
}

std::optional<DimVec> parse_dimvec_block(const std::string& text) {
    size_t i = 0;
    auto read_num = [&](int dflt) {
        size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        return start == i ? dflt : std::stoi(text.substr(start, i - start));
    };
    auto read_part = [&]() -> std::optional<DimVec> {
        int mult = read_num(1);
        if (i >= text.size()) return std::nullopt;
        if (text[i] == 'd') {
            ++i;
            return delta() * mult;
        }
        if (text[i] == 'a') {
            ++i;
            if (i >= text.size() || (text[i] != '0' && text[i] != '1')) return std::nullopt;
            DimVec base = text[i] == '0' ? alpha0() : alpha1();
            ++i;
            return base * mult;
        }
        return std::nullopt;
    };
    DimVec acc;
    for (;;) {
        auto p = read_part();
        if (!p) return std::nullopt;
        acc = acc + *p;
        if (i == text.size()) return acc;
        if (text[i] != '+') return std::nullopt;
        ++i;
    }
}

} // namespace qschur
