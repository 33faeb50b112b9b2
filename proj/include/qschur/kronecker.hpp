#ifndef QSCHUR_KRONECKER_HPP
#define QSCHUR_KRONECKER_HPP

#include "qschur/operator.hpp"

namespace qschur {

// Generator actions of the standard (s), seminilpotent (m) and nilpotent (n)
// quiver Schur algebras of the Kronecker quiver on the polynomial
// representation. Generators acting on inner blocks act on the matching
// variable windows; all other variables are spectators.

Operator kron_idem(SchurVariant v, const IComposition& beta);

// Splits block pos (1-based) of the coarse composition into (left, right).
Operator kron_split(SchurVariant v, const IComposition& coarse, int pos, DimVec left, DimVec right);

// Merges blocks pos, pos+1 of the fine composition.
Operator kron_merge(SchurVariant v, const IComposition& fine, int pos);

// Multiplication by an S_beta-invariant polynomial.
Operator kron_coupon(SchurVariant v, const IComposition& beta, const Poly& P);

// Naive crossing of blocks pos, pos+1: merge followed by the swapped split.
Operator kron_crossing(SchurVariant v, const IComposition& beta, int pos);

// Split of beta into a full refinement (a chain of pairwise splits), and the
// matching merge. gamma must refine beta.
Operator kron_multi_split(SchurVariant v, const IComposition& beta, const IComposition& gamma);
Operator kron_multi_merge(SchurVariant v, const IComposition& gamma, const IComposition& beta);

} // namespace qschur

#endif
