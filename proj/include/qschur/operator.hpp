#ifndef QSCHUR_OPERATOR_HPP
#define QSCHUR_OPERATOR_HPP

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qschur/ring.hpp"

namespace qschur {

enum class SchurVariant { standard, seminilpotent, nilpotent };

std::string variant_str(SchurVariant v);

// Diagram boundary: an I-composition (quiver side) or an I-coloured
// composition (curve side).
using Boundary = std::variant<IComposition, ColouredComposition>;

bool boundary_eq(const Boundary& a, const Boundary& b);
std::string boundary_str(const Boundary& b);

// Ring and isotropy data attached to a boundary. Kronecker boundaries live
// in k[u_1..u_{n0}, v_1..v_{n1}]; curve boundaries in k[x_1..x_n] with
// square-zero c_1..c_n, where c vanishes on epsilon blocks.
SigPtr boundary_sig(const Boundary& b);
SymmetryGroup boundary_group(const Boundary& b);

// Invariant basis of the boundary's polynomial model up to the given
// cohomological degree (orbit sums; epsilon-supported c-monomials excluded).
std::vector<Poly> boundary_basis(const Boundary& b, int maxdeg);

// Membership of P in the boundary's model space.
bool in_boundary_space(const Boundary& b, const Poly& P);

// A source/target-labelled linear map on invariant polynomial spaces with a
// fixed degree shift; the semantic value of any diagram. Immutable closure
// over immutable data; apply is pure.
struct Operator {
    std::optional<SchurVariant> variant; // set for quiver Schur operators
    Boundary source;
    Boundary target;
    int degshift = 0;
    std::function<Poly(const Poly&)> action;
};

Poly apply(const Operator& f, const Poly& P);

// f after g; requires source(f) == target(g). Degree shifts add.
Operator compose(const Operator& f, const Operator& g);

Operator identity_op(const Boundary& b);

// Evaluation equality on the invariant basis of the shared source, up to
// cohomological degree D.
bool equal_up_to_degree(const Operator& f, const Operator& g, int D);

// First basis element up to degree D where the two operators differ, for
// counterexample reports.
std::optional<Poly> first_difference(const Operator& f, const Operator& g, int D);

} // namespace qschur

#endif
