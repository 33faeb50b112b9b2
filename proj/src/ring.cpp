#include "qschur/ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace qschur {

RingSignature::RingSignature(std::vector<VarFamily> families) : families_(std::move(families)) {
    std::set<std::string> names;
    for (const auto& f : families_) {
        if (f.count < 0) throw Error("negative family count");
        if (f.name.empty() || !names.insert(f.name).second)
            throw Error("family names must be distinct and nonempty");
    }
    slot_begin_.assign(families_.size(), 0);
    int next = 0;
    for (size_t i = 0; i < families_.size(); ++i)
        if (families_[i].kind == VarKind::ordinary) {
            slot_begin_[i] = next;
            next += families_[i].count;
        }
    ordinary_total_ = next;
    for (size_t i = 0; i < families_.size(); ++i)
        if (families_[i].kind == VarKind::square_zero) {
            slot_begin_[i] = next;
            next += families_[i].count;
        }
    total_ = next;
}

int RingSignature::family_index(const std::string& name) const {
    for (size_t i = 0; i < families_.size(); ++i)
        if (families_[i].name == name) return static_cast<int>(i);
    return -1;
}

SigPtr make_signature(std::vector<VarFamily> families) {
    return std::make_shared<const RingSignature>(std::move(families));
}

Monomial Monomial::unit(const RingSignature& sig) {
    Monomial m;
    m.e.assign(sig.total_vars(), 0);
    return m;
}

Poly Poly::constant(const SigPtr& sig, const Scalar& c) {
    Poly p(sig);
    if (!c.is_zero()) p.terms_.emplace(Monomial::unit(*sig), c);
    return p;
}

Poly Poly::variable(const SigPtr& sig, const std::string& family, int index) {
    int f = sig->family_index(family);
    if (f < 0) throw Error("unknown family " + family);
    if (index < 1 || index > sig->family(f).count)
        throw Error("index " + std::to_string(index) + " out of range for family " + family);
    Monomial m = Monomial::unit(*sig);
    m.e[sig->slot(f, index - 1)] = 1;
    m.halfdeg = 1;
    return from_monomial(sig, m, Scalar(1));
}

Poly Poly::from_monomial(const SigPtr& sig, const Monomial& m, const Scalar& c) {
    Poly p(sig);
    if (!c.is_zero()) p.terms_.emplace(m, c);
    return p;
}

int Poly::degree() const {
    if (terms_.empty()) return -1;
    return 2 * terms_.rbegin()->first.halfdeg;
}

bool Poly::is_homogeneous() const {
    if (terms_.empty()) return true;
    return terms_.begin()->first.halfdeg == terms_.rbegin()->first.halfdeg;
}

Scalar Poly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
}

Poly Poly::component(int degree) const {
    Poly out(sig_);
    for (const auto& [m, c] : terms_)
        if (2 * m.halfdeg == degree) out.terms_.emplace(m, c);
    return out;
}

void Poly::check_same(const Poly& o) const {
    if (!sig_ || !o.sig_) throw RingMismatch("operation on polynomial without signature");
    if (sig_ != o.sig_ && !(*sig_ == *o.sig_)) throw RingMismatch("different signatures");
}

void Poly::add_term(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly out(sig_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Poly Poly::operator+(const Poly& o) const {
    check_same(o);
    Poly out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

Poly Poly::operator-(const Poly& o) const {
    check_same(o);
    Poly out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
    return out;
}

Poly Poly::operator*(const Poly& o) const {
    check_same(o);
    Poly out(sig_);
    const RingSignature& sig = *sig_;
    Monomial prod;
    prod.e.assign(sig.total_vars(), 0);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            bool dead = false;
            for (int s = 0; s < sig.total_vars(); ++s) {
                int32_t v = ma.e[s] + mb.e[s];
                if (v >= 2 && sig.slot_square_zero(s)) {
                    dead = true;
                    break;
                }
                prod.e[s] = v;
            }
            if (dead) continue;
            prod.halfdeg = ma.halfdeg + mb.halfdeg;
            out.add_term(prod, ca * cb);
        }
    return out;
}

Poly Poly::operator*(const Scalar& c) const {
    Poly out(sig_);
    if (c.is_zero()) return out;
    for (const auto& [m, k] : terms_) out.add_term(m, k * c);
    return out;
}

bool operator==(const Poly& a, const Poly& b) {
    if (a.sig_ && b.sig_) a.check_same(b);
    return a.terms_ == b.terms_;
}

Poly permute_action(const Permutation& pi, const std::vector<std::string>& targets, const Poly& P) {
    const RingSignature& sig = *P.sig();
    std::vector<int> fams;
    for (const auto& name : targets) {
        int f = sig.family_index(name);
        if (f < 0) throw Error("unknown family " + name);
        if (sig.family(f).count != pi.size())
            throw Error("family count mismatch: " + name + " has " +
                        std::to_string(sig.family(f).count) + " variables, permutation acts on " +
                        std::to_string(pi.size()));
        fams.push_back(f);
    }
    Poly out(P.sig());
    for (const auto& [m, c] : P.terms()) {
        Monomial nm = m;
        for (int f : fams)
            for (int i = 0; i < pi.size(); ++i) nm.e[sig.slot(f, pi(i))] = m.e[sig.slot(f, i)];
        out.add_term(nm, c);
    }
    return out;
}

namespace {

// Leading-term division step; returns false if the leading monomial or
// coefficient does not divide.
bool try_div_leading(const Poly& R, const Poly& D, const RingSignature& sig, Monomial& qm,
                     Scalar& qc) {
    const auto& [rm, rc] = *R.terms().rbegin();
    const auto& [dm, dc] = *D.terms().rbegin();
    qm.e.assign(sig.total_vars(), 0);
    for (int s = 0; s < sig.total_vars(); ++s) {
        int32_t v = rm.e[s] - dm.e[s];
        if (v < 0) return false;
        if (v >= 2 && sig.slot_square_zero(s)) return false;
        qm.e[s] = v;
    }
    qm.halfdeg = rm.halfdeg - dm.halfdeg;
    if (dc.modulus() == 0 && dc.is_integer() && rc.is_integer()) {
        Int q = rc.as_int(), d = dc.as_int();
        if (q % d != 0) return false;
    }
    qc = rc.div(dc);
    return true;
}

} // namespace

Poly exact_div(const Poly& P, const Poly& D) {
    if (D.is_zero()) throw NotDivisible("zero divisor polynomial");
    if (P.is_zero()) return Poly::zero(P.sig());
    const RingSignature& sig = *P.sig();
    Poly R = P;
    Poly Q(P.sig());
    Monomial qm;
    Scalar qc;
    while (!R.is_zero()) {
        if (!try_div_leading(R, D, sig, qm, qc)) throw NotDivisible(P.str() + " by " + D.str());
        Poly t = Poly::from_monomial(P.sig(), qm, qc);
        Q += t;
        R -= t * D;
    }
    // Square-zero collisions can make the greedy subtraction lossy, so the
    // quotient is verified before being returned.
    if (!(Q * D == P)) throw NotDivisible(P.str() + " by " + D.str());
    return Q;
}

bool is_invariant(const Poly& P, const SymmetryGroup& group) {
    for (const auto& part : group) {
        if (part.families.empty()) continue;
        int n = comp_sum(part.comp);
        int pos = 0;
        for (int block : part.comp) {
            for (int r = 1; r < block; ++r) {
                Permutation s = Permutation::adjacent(n, pos + r);
                if (!(permute_action(s, part.families, P) == P)) return false;
            }
            pos += block;
        }
    }
    return true;
}

bool is_invariant(const Poly& P, const Composition& lambda, const std::vector<std::string>& targets) {
    return is_invariant(P, SymmetryGroup{{targets, lambda}});
}

namespace {

void enumerate_monomials(const RingSignature& sig, int slot, int budget, Monomial& cur,
                         std::vector<Monomial>& out) {
    if (slot == sig.total_vars()) {
        out.push_back(cur);
        return;
    }
    int hi = sig.slot_square_zero(slot) ? std::min(budget, 1) : budget;
    for (int v = 0; v <= hi; ++v) {
        cur.e[slot] = v;
        cur.halfdeg += v;
        enumerate_monomials(sig, slot + 1, budget - v, cur, out);
        cur.halfdeg -= v;
        cur.e[slot] = 0;
    }
}

std::vector<Monomial> monomials_up_to(const RingSignature& sig, int maxdeg) {
    if (maxdeg < 0) return {};
    Monomial cur = Monomial::unit(sig);
    std::vector<Monomial> out;
    enumerate_monomials(sig, 0, maxdeg / 2, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

// Canonical representative of the orbit of m under the group: within every
// block of every part, the tuples of targeted-family exponents are sorted.
Monomial canonical_orbit_rep(const RingSignature& sig, const SymmetryGroup& group, Monomial m) {
    for (const auto& part : group) {
        std::vector<int> fams;
        for (const auto& name : part.families) fams.push_back(sig.family_index(name));
        int pos = 0;
        for (int block : part.comp) {
            std::vector<std::vector<int32_t>> cols(block);
            for (int i = 0; i < block; ++i)
                for (int f : fams) cols[i].push_back(m.e[sig.slot(f, pos + i)]);
            std::sort(cols.begin(), cols.end());
            for (int i = 0; i < block; ++i) {
                size_t t = 0;
                for (int f : fams) m.e[sig.slot(f, pos + i)] = cols[i][t++];
            }
            pos += block;
        }
    }
    return m;
}

} // namespace

std::vector<Poly> monomial_basis(const SigPtr& sig, int maxdeg) {
    std::vector<Poly> out;
    for (const auto& m : monomials_up_to(*sig, maxdeg))
        out.push_back(Poly::from_monomial(sig, m, Scalar(1)));
    return out;
}

std::vector<Poly> invariant_basis(const SigPtr& sig, const SymmetryGroup& group, int maxdeg) {
    std::map<Monomial, Poly> orbits;
    for (const auto& m : monomials_up_to(*sig, maxdeg)) {
        Monomial key = canonical_orbit_rep(*sig, group, m);
        auto [it, fresh] = orbits.try_emplace(key, Poly(sig));
        it->second.add_term(m, Scalar(1));
    }
    std::vector<Poly> out;
    out.reserve(orbits.size());
    for (auto& [key, p] : orbits) out.push_back(std::move(p));
    return out;
}

Poly kill_vars(const Poly& P, const std::string& family, const std::vector<int>& indices) {
    const RingSignature& sig = *P.sig();
    int f = sig.family_index(family);
    if (f < 0) throw Error("unknown family " + family);
    Poly out(P.sig());
    for (const auto& [m, c] : P.terms()) {
        bool dead = false;
        for (int i : indices)
            if (m.e[sig.slot(f, i - 1)] > 0) {
                dead = true;
                break;
            }
        if (!dead) out.add_term(m, c);
    }
    return out;
}

Poly substitute(const Poly& P, const SigPtr& target, const std::vector<std::vector<Poly>>& images) {
    const RingSignature& sig = *P.sig();
    Poly out = Poly::zero(target);
    for (const auto& [m, c] : P.terms()) {
        Poly term = Poly::constant(target, c);
        for (size_t f = 0; f < sig.families().size(); ++f)
            for (int i = 0; i < sig.family(static_cast<int>(f)).count; ++i)
                for (int k = 0; k < m.e[sig.slot(static_cast<int>(f), i)]; ++k)
                    term *= images[f][i];
        out += term;
    }
    return out;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    const RingSignature& sig = *sig_;
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Scalar k = c;
        if (first) {
            if (k.value() < 0) {
                os << "-";
                k = -k;
            }
        } else {
            if (k.value() < 0) {
                os << " - ";
                k = -k;
            } else {
                os << " + ";
            }
        }
        std::vector<std::string> factors;
        for (size_t f = 0; f < sig.families().size(); ++f)
            for (int i = 0; i < sig.family(static_cast<int>(f)).count; ++i) {
                int e = m.e[sig.slot(static_cast<int>(f), i)];
                if (e == 0) continue;
                std::string v = sig.family(static_cast<int>(f)).name + std::to_string(i + 1);
                if (e > 1) v += "^" + std::to_string(e);
                factors.push_back(v);
            }
        bool unit_coeff = (k == Scalar(1));
        if (!unit_coeff || factors.empty()) os << k.str();
        for (size_t j = 0; j < factors.size(); ++j) {
            if (j > 0 || !unit_coeff) os << "*";
            os << factors[j];
        }
        first = false;
    }
    return os.str();
}

namespace {

struct PolyParser {
    const SigPtr& sig;
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    Poly parse_expr() {
        Poly acc = eat('-') ? -parse_term() : parse_term();
        for (;;) {
            if (eat('+'))
                acc += parse_term();
            else if (eat('-'))
                acc -= parse_term();
            else
                break;
        }
        return acc;
    }

    Poly parse_term() {
        Poly acc = parse_power();
        while (eat('*')) acc *= parse_power();
        return acc;
    }

    Poly parse_power() {
        Poly base = parse_atom();
        if (eat('^')) {
            long e = parse_int();
            if (e < 0) throw ParseError("negative exponent", pos);
            Poly acc = Poly::constant(sig, Scalar(1));
            for (long i = 0; i < e; ++i) acc *= base;
            return acc;
        }
        return base;
    }

    Poly parse_atom() {
        skip_ws();
        if (pos >= s.size()) throw ParseError("unexpected end of input", pos);
        char c = s[pos];
        if (c == '(') {
            ++pos;
            Poly inner = parse_expr();
            if (!eat(')')) throw ParseError("expected ')'", pos);
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return Poly::constant(sig, Scalar(Int(parse_int())));
        if (std::isalpha(static_cast<unsigned char>(c))) return parse_var();
        throw ParseError(std::string("unexpected character '") + c + "'", pos);
    }

    long parse_int() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw ParseError("expected integer", pos);
        return std::stol(s.substr(start, pos - start));
    }

    Poly parse_var() {
        size_t start = pos;
        while (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) ++pos;
        std::string name = s.substr(start, pos - start);
        if (sig->family_index(name) < 0) throw ParseError("unknown variable family " + name, start);
        long idx = parse_int();
        return Poly::variable(sig, name, static_cast<int>(idx));
    }
};

} // namespace

Poly parse_poly(const SigPtr& sig, const std::string& text) {
    PolyParser p{sig, text};
    Poly out = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) throw ParseError("trailing input", p.pos);
    return out;
}

} // namespace qschur
