#ifndef QSCHUR_PERMCOMB_HPP
#define QSCHUR_PERMCOMB_HPP

#include <string>
#include <vector>

#include "qschur/errors.hpp"

namespace qschur {

// Permutation of {1..n} in one-line notation, stored 0-based.
// Composition convention: (a*b)(i) = a(b(i)).
class Permutation {
  public:
    Permutation() = default;
    explicit Permutation(std::vector<int> img);

    static Permutation identity(int n);
    // Adjacent transposition s_r of S_n, 1 <= r <= n-1.
    static Permutation adjacent(int n, int r);
    // One-line notation with 1-based entries, e.g. {2,3,1}.
    static Permutation from_one_line(const std::vector<int>& line);

    int size() const { return static_cast<int>(img_.size()); }
    // Image of i under the permutation, 0-based.
    int operator()(int i) const { return img_[i]; }

    Permutation operator*(const Permutation& o) const;
    Permutation inverse() const;
    bool is_identity() const;
    int length() const; // number of inversions

    // Embeds into S_m acting on the window [offset, offset+size).
    Permutation embed(int m, int offset) const;

    // Reduced word k_1..k_r (1-based adjacent indices) with w = s_{k_1}...s_{k_r},
    // produced by bubble sort. Deterministic.
    std::vector<int> reduced_word() const;

    std::vector<int> one_line() const; // 1-based
    std::string str() const;

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }
    friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
    friend bool operator<(const Permutation& a, const Permutation& b) { return a.img_ < b.img_; }

  private:
    std::vector<int> img_;
};

// Composition of n: ordered list of positive integers. Length 0 allowed for n = 0.
using Composition = std::vector<int>;

int comp_sum(const Composition& c);
std::string comp_str(const Composition& c);

// true iff mu refines lambda: mu's blocks partition lambda's blocks in order.
bool refines(const Composition& mu, const Composition& lambda);

// Dimension vector for the Kronecker quiver: n0*alpha_0 + n1*alpha_1.
struct DimVec {
    int n0 = 0;
    int n1 = 0;

    int total() const { return n0 + n1; }
    bool is_zero() const { return n0 == 0 && n1 == 0; }

    DimVec operator+(const DimVec& o) const { return {n0 + o.n0, n1 + o.n1}; }
    DimVec operator-(const DimVec& o) const { return {n0 - o.n0, n1 - o.n1}; }
    DimVec operator*(int k) const { return {k * n0, k * n1}; }
    friend bool operator==(const DimVec& a, const DimVec& b) { return a.n0 == b.n0 && a.n1 == b.n1; }
    friend bool operator!=(const DimVec& a, const DimVec& b) { return !(a == b); }
    friend bool operator<(const DimVec& a, const DimVec& b) {
        return a.n0 != b.n0 ? a.n0 < b.n0 : a.n1 < b.n1;
    }

    std::string str() const;
};

inline DimVec alpha0() { return {1, 0}; }
inline DimVec alpha1() { return {0, 1}; }
inline DimVec delta() { return {1, 1}; }

// I-composition: ordered list of nonzero dimension vectors.
using IComposition = std::vector<DimVec>;

DimVec icomp_sum(const IComposition& b);
std::string icomp_str(const IComposition& b);
bool irefines(const IComposition& mu, const IComposition& lambda);

enum class Colour { tau, eps };

struct ColouredBlock {
    int size = 0;
    Colour colour = Colour::tau;
    friend bool operator==(const ColouredBlock& a, const ColouredBlock& b) {
        return a.size == b.size && a.colour == b.colour;
    }
};

// I-coloured composition of n: blocks (size, colour).
using ColouredComposition = std::vector<ColouredBlock>;

int ccomp_sum(const ColouredComposition& c);
std::string ccomp_str(const ColouredComposition& c);
Composition ccomp_underlying(const ColouredComposition& c);

// The map c-lambda -> beta_{c-lambda}: (n eps) -> (n delta), (n tau) -> (n a0, n a1),
// extended to commute with concatenation.
IComposition ccomp_to_icomp(const ColouredComposition& c);

// Datum of a double coset in S_lambda \ S_n / S_mu: minimal-length
// representative, contingency matrix, induced refinements and block permutation.
struct CosetDatum {
    Permutation w;
    std::vector<std::vector<int>> cells; // cells[i][j] = #(lambda-block i  cap  w(mu-block j))
    Composition lambda_p;                // nonzero cells, row-major
    Composition mu_p;                    // nonzero cells, column-major
    Permutation sigma;                   // on nonzero cells: row-major position -> column-major position
    std::vector<int> word;               // reduced word for sigma
};

// All double cosets of S_lambda \ S_n / S_mu, enumerated via contingency
// tables with row sums lambda and column sums mu, in descending
// lexicographic row-major order of the flattened table.
std::vector<CosetDatum> double_cosets(const Composition& lambda, const Composition& mu);

// Same for I-compositions: a pair of cosets, one per colour, with the
// interleaved refinements of eq-style cell bookkeeping.
struct ColouredCosetDatum {
    Permutation w0, w1; // representatives per colour
    std::vector<std::vector<DimVec>> cells;
    IComposition beta_p;  // nonzero cells, row-major
    IComposition gamma_p; // nonzero cells, column-major
    Permutation sigma;
    std::vector<int> word;
};

std::vector<ColouredCosetDatum> coloured_cosets(const IComposition& beta, const IComposition& gamma);

// All compositions of n (for small n).
std::vector<Composition> all_compositions(int n);
// All I-compositions of v.
std::vector<IComposition> all_icompositions(const DimVec& v);
// All partitions of n, entries weakly decreasing.
std::vector<Composition> all_partitions(int n);

} // namespace qschur

#endif
