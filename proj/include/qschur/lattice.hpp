#ifndef QSCHUR_LATTICE_HPP
#define QSCHUR_LATTICE_HPP

#include <map>
#include <string>
#include <vector>

#include "qschur/curve.hpp"
#include "qschur/ring.hpp"

namespace qschur {

// Dense integer matrix with exact arithmetic; rows are lattice generators.
using IntMat = std::vector<std::vector<Int>>;

// Row-style Hermite normal form: returns the nonzero reduced rows (a basis
// of the row lattice), deterministic.
IntMat hermite_normal_form(IntMat rows);

// Rank of the row space (over Q).
int int_rank(IntMat rows);

// Nontrivial elementary divisors (diagonal of the Smith form, entries > 1
// kept, 0 for missing rank).
std::vector<Int> smith_divisors(IntMat m);

// True iff v is an integer combination of the HNF rows.
bool hnf_member(const IntMat& hnf, std::vector<Int> v);

// Degree-indexed family of integer sublattices of the monomial space of
// Z[x,c]/(c^2) in n variables; each graded piece is kept in HNF over a fixed
// monomial column order.
class GradedLattice {
  public:
    GradedLattice(int n, int maxdeg) : n_(n), maxdeg_(maxdeg) {}

    int vars() const { return n_; }
    int maxdeg() const { return maxdeg_; }

    void add_generator(const Poly& P); // homogeneous, degree <= maxdeg
    void reduce();                     // put every graded piece in HNF

    bool member(const Poly& P) const; // homogeneous of degree <= maxdeg
    int rank(int degree) const;
    const IntMat& piece(int degree) const;

    // Coefficient row of a homogeneous polynomial in the degree's column order.
    std::vector<Int> row_of(const Poly& P, int degree) const;
    // Monomials spanning the ambient space in that degree.
    const std::vector<Monomial>& columns(int degree) const;

  private:
    int n_;
    int maxdeg_;
    mutable std::map<int, std::vector<Monomial>> columns_;
    std::map<int, IntMat> pieces_;
    std::map<int, bool> reduced_;

    const std::vector<Monomial>& columns_for(int degree) const;
};

// The integer lattice Lambda * Im(M_{1^n}) inside Z[x,c]/(c^2), organized per
// even degree <= D. Lambda is generated by the elementary symmetric
// polynomials e_1..e_n (the realized Chern classes).
GradedLattice torsion_lattice(int n, int D);

// Substitution u_i -> x_i, v_i -> x_i + c_i from the u,v ring (equal counts).
Poly phi_tilde(const Poly& P);

// Per-degree comparison of the phi-image of the bisymmetric invariants with
// the tautological lattice.
struct PhiCompareRow {
    int degree = 0;
    int rank_lattice = 0;
    int rank_phi = 0;
    int rank_invariants = 0;        // ambient S_n-invariants (over Q)
    bool equal = false;             // phi-span == lattice in this degree
    std::vector<Int> divisors;      // elementary divisors of invariants/lattice
};

std::vector<PhiCompareRow> compare_phi_image(int n, int D);

// Integral model of the coupon space H^*(T_{c-lambda}, Z): epsilon blocks use
// symmetric pure-x polynomials, tau blocks use the tautological lattice.
// over_Q swaps the tau blocks to full invariants.
std::vector<Poly> coupon_basis(const ColouredComposition& cl, int maxdeg, bool over_Q = false);

} // namespace qschur

#endif
