#ifndef QSCHUR_DEMAZURE_HPP
#define QSCHUR_DEMAZURE_HPP

#include "qschur/ring.hpp"

namespace qschur {

// Divided-difference operators. The transposition acts simultaneously on all
// targeted families; the divisor lives in the designated ordinary family
// (the unique ordinary family among the targets).

// One step: (P - s_r P) / (X_r - X_{r+1}), r 1-based.
Poly demazure_step(int r, const std::vector<std::string>& targets, const Poly& P);

// Composite along a reduced word of w (bubble-sort word; independence of the
// word is a property test, not an assumption).
Poly demazure(const Permutation& w, const std::vector<std::string>& targets, const Poly& P);

// Shuffle operator on the window [offset+1, offset+a+b] inside families of
// count >= offset+a+b; offset defaults to the leftmost window.
Poly demazure_shuffle(int a, int b, const std::vector<std::string>& targets, const Poly& P,
                      int offset = 0);

// Longest element of S_n on a window.
Permutation longest_element(int n);

// Staircase monomial x_1^{n-1} x_2^{n-2} ... x_{n-1} in the given family.
Poly staircase(const SigPtr& sig, const std::string& family, int n, int offset = 0);

} // namespace qschur

#endif
