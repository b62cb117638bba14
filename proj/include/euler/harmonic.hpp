#ifndef EULER_HARMONIC_HPP
#define EULER_HARMONIC_HPP

#include <unordered_map>
#include <utility>
#include <vector>

#include "euler/algebra.hpp"
#include "euler/cyclotomic.hpp"

namespace euler {

// Direct nested summation over n >= n_1 > n_2 > ... > n_k >= 1 of
// prod e^{j_t n_t} / n_t^{i_t}.  The evaluation oracle: deliberately
// definition-shaped, no shared machinery with the recursive evaluator.
Cyclotomic eval_A_bruteforce(const Word& w, int n);

// Same summand over weak chains n >= n_1 >= ... >= n_k >= 1.
Cyclotomic eval_S_bruteforce(const Word& w, int n);

// Recursive evaluator with a per-session (word, n) value cache.  A session
// is thread-confined; distinct sessions evaluate independently.
class HarmonicEvaluator {
public:
    // Strict sum A_w(n), computed by the suffix recursion
    //   A_{aw'}(m) = A_{aw'}(m-1) + e^{j_a m}/m^{i_a} A_{w'}(m-1).
    Cyclotomic A(const Word& w, int n);

    // Weak sum S_w(n) = rho_n(overline(w)) = sum of A over coarsenings.
    Cyclotomic S(const Word& w, int n);

    // rho_n: linear extension of A over an element's terms.
    Cyclotomic rho(const AlgebraElement& x, int n);

    // rho_n of an element whose term map holds overline-basis coordinates:
    // sum of coefficient * S_word(n).
    Cyclotomic rho_overline(const AlgebraElement& coords, int n);

private:
    struct KeyHash {
        size_t operator()(const std::pair<Word, int>& k) const;
    };
    struct KeyEq {
        bool operator()(const std::pair<Word, int>& a, const std::pair<Word, int>& b) const
        {
            return a.second == b.second && a.first == b.first;
        }
    };
    std::unordered_map<std::pair<Word, int>, Cyclotomic, KeyHash, KeyEq> cache_;
};

// One-shot evaluations (fresh session each call).
Cyclotomic eval_A(const Word& w, int n);
Cyclotomic eval_S(const Word& w, int n);

// Result record surfaced through the CLI: the request together with its
// exact value.
struct HarmonicResult {
    Word word;
    int n;
    char kind;  // 'A' strict, 'S' weak
    Cyclotomic value;
};

HarmonicResult evaluate_harmonic(const Word& w, int n, char kind);

// One signed product of harmonic-sum factors: coeff * prod over factors.
struct SignedProduct {
    Rational coeff;
    std::vector<Word> factors;
};

// w as a signed combination in the overline basis,
//   w = sum_{J in C(l(w))} (-1)^{l(w)-l(J)} overline(J[w]),
// so that applying rho_n turns it into the Moebius inversion
//   A_w(n) = sum_J (-1)^{l(w)-l(J)} S_{J[w]}(n).
AlgebraElement a_from_s_expansion(const Word& w);

// S_w(n) = sum over factorizations R(w) = w_1...w_k into nonempty subwords
// of (-1)^{l(w)-k} A_{w_1}(n) ... A_{w_k}(n).  Factors are to be evaluated
// as A-sums.
std::vector<SignedProduct> product_expansion_S(const Word& w);

// Companion expansion with the same factorizations and signs, factors to be
// evaluated as S-sums: A_w(n) = sum (-1)^{l(w)-k} S_{w_1}(n) ... S_{w_k}(n).
std::vector<SignedProduct> product_expansion_A(const Word& w);

// The length-reduction identity
//   A_w(n) + (-1)^{l(w)} A_{R(w)}(n)
//     = sum_{k>1 factorizations of R(w)} (-1)^{l(w)-k} prod A_{w_t}(n)
//       - sum_{u strictly coarser than w} A_u(n);
// every term on the right has length below l(w).
struct DualityIdentity {
    Word w;
    Rational reversed_sign;                // (-1)^{l(w)}, the weight of A_{R(w)}
    std::vector<SignedProduct> products;   // k > 1 factorizations, A-factors
    std::vector<SignedProduct> coarser;    // strict coarsenings, coeff -1 each
};

DualityIdentity duality_reduction(const Word& w);  // requires l(w) >= 2

// Value of a signed-product expansion; kind 'A' or 'S' selects how factors
// are evaluated.
Cyclotomic eval_signed_products(const std::vector<SignedProduct>& terms, char kind, int n,
                                HarmonicEvaluator& ev);

}  // namespace euler

#endif
