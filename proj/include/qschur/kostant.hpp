#ifndef QSCHUR_KOSTANT_HPP
#define QSCHUR_KOSTANT_HPP

#include <optional>
#include <string>
#include <vector>

#include "qschur/permcomb.hpp"
#include "qschur/scalar.hpp"

namespace qschur {

// Positive roots of affine sl2: alpha_i + k*delta (real) and delta, with the
// imaginary root split into two markers bullet > circ for the marked theory.
enum class RootKind { real0, real1, imag };
enum class Marker { none, bullet, circ };

struct MarkedRoot {
    RootKind kind = RootKind::imag;
    int k = 0; // alpha_i + k*delta; ignored for imag (the root is delta itself)
    Marker marker = Marker::none;

    DimVec vec() const;
    bool is_real() const { return kind != RootKind::imag; }
    std::string str() const;

    friend bool operator==(const MarkedRoot& a, const MarkedRoot& b) {
        return a.kind == b.kind && (a.is_real() ? a.k == b.k : a.marker == b.marker);
    }
};

MarkedRoot real_root(int i, int k); // alpha_i + k delta
MarkedRoot delta_bullet();
MarkedRoot delta_circ();

// Exact slope n1/(n0+n1) in [0,1].
Rat theta(const DimVec& v);
Rat theta_comp(const IComposition& beta, size_t lo, size_t hi); // slope of a partial sum

// Total order on marked roots: the chain alpha_0 < alpha_0+delta < ... <
// delta_circ < delta_bullet < ... < alpha_1+delta < alpha_1.
// Returns <0, 0, >0.
int root_chain_compare(const MarkedRoot& a, const MarkedRoot& b);

// (Marked) Kostant partition: (mult, root) pairs with strictly decreasing roots.
struct MKPart {
    std::vector<std::pair<int, MarkedRoot>> parts;

    DimVec weight() const;
    std::string str() const;
    int delta_bullet_mult() const;
    int delta_circ_mult() const;

    friend bool operator==(const MKPart& a, const MKPart& b) { return a.parts == b.parts; }
};

// Complete duplicate-free enumerations.
std::vector<MKPart> enumerate_mkp(const DimVec& v);
std::vector<MKPart> enumerate_kp(const DimVec& v); // no markers (delta parts carry Marker::none)

// Reverse lexicographic order: at the first differing entry, the larger root
// wins as smaller; for equal roots, the larger multiplicity. Returns <0,0,>0
// for a <_L b / equal / a >_L b.
int revlex_compare(const MKPart& a, const MKPart& b);

// Index of a stratum of the polyheredity chain: a marked Kostant partition
// with partitions of the two delta multiplicities.
struct PolyheredityIndex {
    MKPart mkp;
    Composition lambda; // partition of delta_bullet multiplicity
    Composition mu;     // partition of delta_circ multiplicity

    std::string str() const;
};

// The composition gamma(mkbeta, lambda, mu) built from the per-part standard
// flag types. The partitions enter untransposed; this convention together
// with the comparator below is calibrated against the printed chain for 2*delta.
IComposition gamma_composition(const PolyheredityIndex& idx);

// Triple comparator: mkp by reverse-lex, then lambda, then mu, each partition
// compared first-difference-larger-entry-smaller. Returns <0,0,>0.
int index_compare(const PolyheredityIndex& a, const PolyheredityIndex& b);

// Noncuspidality: some proper prefix has strictly larger slope than the
// complementary suffix.
bool is_noncuspidal(const IComposition& beta);

// All indices for the weight v in chain order, with their gamma compositions.
// restrict_imaginary keeps only indices whose marked partition is supported
// on the imaginary roots (the Lambda' chain for n*delta).
std::vector<std::pair<PolyheredityIndex, IComposition>> polyheredity_chain(
    const DimVec& v, bool restrict_imaginary = false);

// Parses textual root/dimvec block forms like `a0+2d`, `2a1`, `d`, `3d`.
std::optional<DimVec> parse_dimvec_block(const std::string& text);

} // namespace qschur

#endif
