#include "qschur/demazure.hpp"

#include <algorithm>

namespace qschur {

namespace {

// The unique ordinary family among the targets carries the X_r - X_{r+1} divisor.
std::string designated_family(const RingSignature& sig, const std::vector<std::string>& targets) {
    std::string found;
    for (const auto& name : targets) {
        int f = sig.family_index(name);
        if (f < 0) throw Error("unknown family " + name);
        if (sig.family(f).kind == VarKind::ordinary) {
            if (!found.empty()) throw Error("ambiguous designated family for Demazure operator");
            found = name;
        }
    }
    if (found.empty()) throw Error("no ordinary family among Demazure targets");
    return found;
}

} // namespace

Poly demazure_step(int r, const std::vector<std::string>& targets, const Poly& P) {
    const RingSignature& sig = *P.sig();
    std::string xfam = designated_family(sig, targets);
    int n = sig.family(sig.family_index(xfam)).count;
    Permutation s = Permutation::adjacent(n, r);
    Poly num = P - permute_action(s, targets, P);
    Poly div = Poly::variable(P.sig(), xfam, r) - Poly::variable(P.sig(), xfam, r + 1);
    return exact_div(num, div);
}

Poly demazure(const Permutation& w, const std::vector<std::string>& targets, const Poly& P) {
    Poly out = P;
    std::vector<int> word = w.reduced_word();
    for (auto it = word.rbegin(); it != word.rend(); ++it) out = demazure_step(*it, targets, out);
    return out;
}

namespace {

Permutation shuffle_perm(int a, int b) {
    int n = a + b;
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i < a ? i + b : i - a;
    return Permutation(std::move(img));
}

} // namespace

Poly demazure_shuffle(int a, int b, const std::vector<std::string>& targets, const Poly& P,
                      int offset) {
    if (a == 0 || b == 0) return P;
    const RingSignature& sig = *P.sig();
    int n = sig.family(sig.family_index(designated_family(sig, targets))).count;
    Permutation w = shuffle_perm(a, b).embed(n, offset);
    return demazure(w, targets, P);
}

Permutation longest_element(int n) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = n - 1 - i;
    return Permutation(std::move(img));
}

Poly staircase(const SigPtr& sig, const std::string& family, int n, int offset) {
    Poly out = Poly::constant(sig, Scalar(1));
    for (int i = 1; i < n; ++i) {
        Poly x = Poly::variable(sig, family, offset + i);
        for (int k = 0; k < n - i; ++k) out *= x;
    }
    return out;
}

} // namespace qschur
