#ifndef QSCHUR_RING_HPP
#define QSCHUR_RING_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qschur/permcomb.hpp"
#include "qschur/scalar.hpp"

namespace qschur {

enum class VarKind { ordinary, square_zero };

struct VarFamily {
    std::string name;
    int count = 0;
    VarKind kind = VarKind::ordinary;
    friend bool operator==(const VarFamily& a, const VarFamily& b) {
        return a.name == b.name && a.count == b.count && a.kind == b.kind;
    }
};

// Variable families of a graded-commutative polynomial ring. Every variable
// has cohomological degree 2; square-zero variables satisfy v^2 = 0.
// Monomial slots are laid out with all ordinary families first, so the
// monomial order (degree, ordinary exponents, square-zero mask) is a plain
// lexicographic comparison of the slot vector.
class RingSignature {
  public:
    explicit RingSignature(std::vector<VarFamily> families);

    const std::vector<VarFamily>& families() const { return families_; }
    int total_vars() const { return total_; }

    int family_index(const std::string& name) const; // -1 if absent
    const VarFamily& family(int f) const { return families_[f]; }
    int slot(int f, int index) const { return slot_begin_[f] + index; }
    bool slot_square_zero(int s) const { return s >= ordinary_total_; }

    friend bool operator==(const RingSignature& a, const RingSignature& b) {
        return a.families_ == b.families_;
    }

  private:
    std::vector<VarFamily> families_;
    std::vector<int> slot_begin_;
    int ordinary_total_ = 0;
    int total_ = 0;
};

using SigPtr = std::shared_ptr<const RingSignature>;

SigPtr make_signature(std::vector<VarFamily> families);

// Exponent vector over a signature's slots; half-degree cached for ordering.
struct Monomial {
    std::vector<int32_t> e;
    int32_t halfdeg = 0;

    static Monomial unit(const RingSignature& sig);

    friend bool operator<(const Monomial& a, const Monomial& b) {
        if (a.halfdeg != b.halfdeg) return a.halfdeg < b.halfdeg;
        return a.e < b.e;
    }
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
};

// Sparse polynomial: finite map Monomial -> nonzero Scalar. Immutable in
// spirit; all operations return new values. Arithmetic requires equal
// signatures, and any product with exponent >= 2 on a square-zero variable
// is dropped.
class Poly {
  public:
    Poly() = default;
    explicit Poly(SigPtr sig) : sig_(std::move(sig)) {}

    static Poly zero(const SigPtr& sig) { return Poly(sig); }
    static Poly constant(const SigPtr& sig, const Scalar& c);
    static Poly variable(const SigPtr& sig, const std::string& family, int index); // 1-based index
    static Poly from_monomial(const SigPtr& sig, const Monomial& m, const Scalar& c);

    const SigPtr& sig() const { return sig_; }
    const std::map<Monomial, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    // Cohomological degree bounds; -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;

    Scalar coeff(const Monomial& m) const;
    // Homogeneous component of the given cohomological degree.
    Poly component(int degree) const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Scalar& c) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    std::string str() const;

    void add_term(const Monomial& m, const Scalar& c); // used by builders

  private:
    void check_same(const Poly& o) const;

    SigPtr sig_;
    std::map<Monomial, Scalar> terms_;
};

// A product of parabolic blocks, each acting simultaneously on a set of
// families of equal count. The isotropy data for invariant subrings.
struct SymmetryPart {
    std::vector<std::string> families;
    Composition comp;
};
using SymmetryGroup = std::vector<SymmetryPart>;

// Permutes the indices of all targeted families simultaneously by pi
// (a ring automorphism). pi.size() must equal the count of every target.
Poly permute_action(const Permutation& pi, const std::vector<std::string>& targets, const Poly& P);

// Quotient with P = Q*D; throws NotDivisible if no exact quotient exists.
Poly exact_div(const Poly& P, const Poly& D);

bool is_invariant(const Poly& P, const SymmetryGroup& group);
bool is_invariant(const Poly& P, const Composition& lambda, const std::vector<std::string>& targets);

// Deterministic, duplicate-free basis of the polynomial space up to the
// given cohomological degree: plain monomials, or orbit sums of monomials
// for the invariants of a symmetry group.
std::vector<Poly> monomial_basis(const SigPtr& sig, int maxdeg);
std::vector<Poly> invariant_basis(const SigPtr& sig, const SymmetryGroup& group, int maxdeg);

// Kills every term with a positive exponent on family variable (1-based indices).
Poly kill_vars(const Poly& P, const std::string& family, const std::vector<int>& indices);

// Ring homomorphism determined by images of the variables.
Poly substitute(const Poly& P, const SigPtr& target,
                const std::vector<std::vector<Poly>>& images); // images[family][index]

// Textual polynomial syntax: `3*u1^2*v2 - c1*x2 + 1`, families named by
// prefix, 1-based indices, whitespace-insensitive.
Poly parse_poly(const SigPtr& sig, const std::string& text);

} // namespace qschur

#endif
