#ifndef QSCHUR_SUITES_HPP
#define QSCHUR_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qschur/operator.hpp"

namespace qschur {

// One verified relation or property instance. When a check fails, `detail`
// carries a minimal counterexample (the input and both evaluations).
struct CheckResult {
    std::string suite;
    std::string name;
    bool pass = false;
    std::string detail;
};

bool all_pass(const std::vector<CheckResult>& rs);

// Associativity of splits and merges for all three variants and all block
// triples with |alpha| <= max_total, compared up to degree D.
std::vector<CheckResult> suite_assoc(int max_total, int D);

// Coupon slides, colour change past splits with the Q_lambda coupon and its
// sign, plus the upside-down versions; n <= nmax, degree bound D.
std::vector<CheckResult> suite_color_past_split(int nmax, int D);

// Two-colour-change composites: the Euler class and the zero composite.
std::vector<CheckResult> suite_colour_change(int nmax, int D);

// Thick colour changes through thin ones; the second identity's sign is
// determined empirically and reported.
std::vector<CheckResult> suite_thick_thin(int nmax, int D);

// Thin multicoloured crossing formula (cross-checked against the naive
// tau-crossing) and the colour-slide identities modulo the length filtration.
std::vector<CheckResult> suite_mc_cross(int D);
std::vector<CheckResult> suite_colour_slide(int D);

// Affine wreath product relations: involutivity, braid (n = 3), the f- and
// x-commutation relations, and the twisted Leibniz rule.
std::vector<CheckResult> suite_wreath(int nmax, int D);

// Demazure properties: squares, braid, twisted Leibniz, staircase identity,
// shuffle invariance; seeded random trials. A nonzero modulus runs the
// trials over F_p instead of Z.
std::vector<CheckResult> suite_demazure(int nmax, int trials, uint64_t seed, uint32_t modulus = 0);

// Double coset data vs. brute-force enumeration of S_n, n <= nmax.
std::vector<CheckResult> suite_cosets(int nmax);

// Integer cohomology lattice checks at n <= nmax, degree <= D.
std::vector<CheckResult> suite_cohomology(int nmax, int D);

// Extended zigzag dimensions and weak Frobenius identity.
std::vector<CheckResult> suite_zigzag();

// Basis independence for psi elements over all boundary pairs of the given
// weight (quiver side, fixed variant), coupons up to degree D.
struct BasisCount {
    long elements = 0;
    long rank = 0;
    bool independent = false;
};
BasisCount basis_independence(SchurVariant v, const DimVec& alpha, int D);

// Polyheredity chain as printed rows "gamma  <-  index".
std::vector<std::string> order_table(const DimVec& v, bool restrict_imaginary);

} // namespace qschur

#endif
