#ifndef QSCHUR_CURVE_HPP
#define QSCHUR_CURVE_HPP

#include <array>

#include "qschur/operator.hpp"

namespace qschur {

// Extended curve Schur algebra of P^1 in its polynomial representation.
// Boundaries are I-coloured compositions; the model ring is k[x_1..x_n] with
// square-zero c_1..c_n, where c_i = 0 on indices inside epsilon blocks and
// blocks act by simultaneous (x, c) permutation. The diagonal class is
// Delta_ij = c_i + c_j.

Operator curve_idem(const ColouredComposition& cl);
Operator curve_coupon(const ColouredComposition& cl, const Poly& P);

// Splits block pos (1-based) into sizes (left, right) of the same colour.
Operator curve_split(const ColouredComposition& coarse, int pos, int left, int right);

// Merges blocks pos, pos+1 (must have equal colour).
Operator curve_merge(const ColouredComposition& fine, int pos);

// Full split to thin strands and the matching full merge.
Operator curve_multi_split(const ColouredComposition& coarse, const ColouredComposition& fine);
Operator curve_multi_merge(const ColouredComposition& fine, const ColouredComposition& coarse);

// Colour change of block pos. eps->tau multiplies by the Euler class
// prod_i c_i prod_{i != j} (x_i - x_j) of the window; tau->eps sets the
// window's positive-degree curve classes to zero.
Operator colour_change(const ColouredComposition& boundary, int pos, Colour to);

// Naive crossing of two same-colour blocks: merge then swapped split.
Operator curve_crossing(const ColouredComposition& fine, int pos);

// Thin multicoloured crossing of blocks pos, pos+1 (sizes 1, opposite colours).
Operator mc_cross_thin(const ColouredComposition& fine, int pos);

// Thick multicoloured crossing, expanded through thin crossings. The closed
// formula is conjectural; the operator must be explicitly enabled.
Operator mc_cross_thick(const ColouredComposition& fine, int pos, bool conjectural);

// The window Euler class prod_{i in win} c_i prod_{i != j in win} (x_i - x_j).
Poly euler_class(const SigPtr& sig, int offset, int size);

// ---- Affine wreath product model on thin strands ----

// A colouring of n thin strands.
using Colouring = std::vector<Colour>;

Colouring swap_adjacent(const Colouring& cl, int i);
ColouredComposition thin_comp(const Colouring& cl);

// Wreath-algebra elements act componentwise on the direct sum over all 2^n
// colourings; each generator sends a component into a single component.
struct WreathOp {
    int n = 0;
    // Maps (source colouring, element) to (target colouring, image).
    std::function<std::pair<Colouring, Poly>(const Colouring&, const Poly&)> act;
};

// The crossing s-hat_i, acting per the colour case table:
// (tau,tau): s + Delta * d;  (eps,eps): s;
// (eps,tau): s + c_i * d(c_{i+1}-free part);  (tau,eps): mirrored.
WreathOp wreath_crossing(int i, int n);

// Multiplication by x_j, and the action of Delta'_{i,i+1}.
WreathOp wreath_var(int j, int n);
WreathOp wreath_delta(int i, int n);

// One tensor factor of the realized extended zigzag algebra.
enum class ZigzagElem { one_tau, one_eps, y, z, zy };

// f = b_1 x ... x b_n acting diagonally on colourings.
WreathOp wreath_tensor(const std::vector<ZigzagElem>& factors);
ZigzagElem zigzag_swap_colour_source(ZigzagElem); // source colour bookkeeping

WreathOp wreath_compose(const WreathOp& a, const WreathOp& b); // a after b

// Equality on every colouring component, on the monomial basis up to degree D.
bool wreath_equal(const WreathOp& a, const WreathOp& b, int D);

// Component model basis: monomials with no c on eps strands.
std::vector<Poly> colouring_basis(const Colouring& cl, int maxdeg);

// Twisted Demazure operator on the all-tau model ring:
// (Delta_{i,i+1} (P - s_i P)) / (x_i - x_{i+1}), an exact division.
Poly twisted_demazure(int i, const Poly& P);

// Simultaneous (x,c) adjacent swap on the curve model ring.
Poly curve_swap(int i, const Poly& P);

// ---- Extended zigzag algebra of P^1 ----

// The realized algebra End_{H^*(P^1)}(H^*(P^1) + M_pt): multiplication table
// over the basis (one_tau, one_eps, y, z, zy).
struct ZigzagAlgebra {
    // table[a][b] = coefficients of the product a*b in the basis
    std::array<std::array<std::array<int, 5>, 5>, 5> table{};

    static ZigzagAlgebra realize(); // computed from H-linear endomorphisms
    bool weak_frobenius_holds() const; // (f1 x f2) Delta' == Delta' (f2 x f1)
};

// Graded dimensions of the extended zigzag algebra of P^1 in the
// 2 + 2g t + 3t^2 normalization: (2, 0, 3) for genus 0.
std::array<int, 3> zigzag_dims();

} // namespace qschur

#endif
