#ifndef QSCHUR_DIAGRAM_HPP
#define QSCHUR_DIAGRAM_HPP

#include <optional>
#include <string>
#include <vector>

#include "qschur/curve.hpp"
#include "qschur/kronecker.hpp"
#include "qschur/operator.hpp"

namespace qschur {

// One generator in a diagram, bottom to top. Boundaries of consecutive nodes
// are chained; `below` and `above` are filled during validation.
struct DiagramNode {
    enum class Kind { idem, split, merge, cross, coupon, colour_change, mc_cross };
    Kind kind = Kind::idem;
    int pos = 0;                 // 1-based block position; 0 = inferred
    Boundary below, above;

    // split: the two parts; merge uses pos only.
    std::optional<DimVec> ileft, iright; // quiver splits
    int cleft = 0, cright = 0;           // coloured splits
    std::string coupon_text;             // parsed against the boundary ring
    Colour cc_to = Colour::eps;          // colour change target
    size_t src_pos = 0;                  // position in the source text
};

struct Diagram {
    std::vector<DiagramNode> nodes;
    Boundary source; // bottom
    Boundary target; // top
};

// Parses the line-oriented grammar: statements separated by `;`, nodes
//   id[COMP]  split[BLK->BLK|BLK@POS]  merge[BLK|BLK->BLK@POS]  cross[@POS]
//   coupon[EXPR]  cc[t->e@POS]  cc[e->t@POS]  mx[@POS]
// with blocks written 2d, 1a0, 3a1, 2t, 1e or (n0,n1), and compositions as
// `+`-separated blocks. If the diagram does not start with id[..], the first
// split/merge statement must carry the whole boundary.
Diagram parse_diagram(const std::string& text);

// Evaluates bottom-to-top into an Operator. The variant selects the quiver
// Schur action for I-composition diagrams and is ignored for coloured ones.
// Thick multicoloured crossings require allow_conjectural.
Operator eval_diagram(const Diagram& dg, SchurVariant variant, bool allow_conjectural = false);

// The basis element psi_w^P for a pair of I-compositions: split to the
// coset's fine composition, coupon P, naive crossings along the block word,
// merge to the target.
Diagram psi_element(const ColouredCosetDatum& datum, const Poly& P, const IComposition& beta,
                    const IComposition& gamma);

// Coloured version: colour changes are inserted between the crossings and
// the epsilon-coloured end of each colour-changing cell.
Diagram psi_element_curve(const CosetDatum& datum, const Poly& P, const ColouredComposition& cla,
                          const ColouredComposition& cmu);

// The intermediate composition carrying the coupon, and its psi colouring
// (tau iff both ends are tau) for the curve version.
IComposition psi_coupon_boundary(const ColouredCosetDatum& datum);
ColouredComposition psi_coupon_colouring(const CosetDatum& datum, const ColouredComposition& cla,
                                         const ColouredComposition& cmu);

struct IndependenceReport {
    std::vector<std::string> elements;
    int degree_bound = 0;
    long rank = 0;
    bool independent = false;
    std::string verdict;
};

// Evaluates each element on the invariant basis of the shared source up to
// degree D, stacks coefficient rows and computes the exact rank. Full rank
// certifies independence; a deficient rank at finite D proves nothing.
IndependenceReport independence_report(const std::vector<Diagram>& elems, SchurVariant variant,
                                       int D);

// Rank certification for already-evaluated operators (grouped internally by
// degree shift; a full-rank verdict is exact).
struct RankResult {
    long rows = 0;
    long rank = 0;
    bool full = false;
};
RankResult operator_rank(const std::vector<Operator>& ops, int D);

} // namespace qschur

#endif
