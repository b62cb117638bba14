#ifndef EULER_SYMMETRIC_HPP
#define EULER_SYMMETRIC_HPP

#include <span>

#include "euler/harmonic.hpp"
#include "euler/partitions.hpp"

namespace euler {

// sigma applied to the letters of w: position t of the result receives the
// letter at position sigma[t].
Word apply_permutation(const Word& w, std::span<const int> sigma);

// Both sides of a symmetrization identity, returned for comparison.
struct SymmetrizedPair {
    Cyclotomic lhs;
    Cyclotomic rhs;
};

// lhs = sum over all permutations sigma of A_{sigma.w}(n);
// rhs = sum over set partitions B of c(B) * prod_t A_{[block bracket]}(n).
SymmetrizedPair symmetrize_A(const Word& w, int n, HarmonicEvaluator& ev);

// Weak-sum version: lhs uses S, rhs uses |c(B)|.
SymmetrizedPair symmetrize_S(const Word& w, int n, HarmonicEvaluator& ev);

// S_{a^k}(n) through integer partitions of k:
//   sum over (b_1 >= ... >= b_q) of (prod_s 1/m_s!) prod_t (1/b_t) A_{[b_t a]}(n).
Cyclotomic power_sum_S(const Letter& a, int k, int n, HarmonicEvaluator& ev);

// Signed analog equal to A_{a^k}(n): the per-part factor is
// (-1)^{b_t - 1} / b_t.  The sign pattern is confirmed against the
// brute-force oracle once per ambient index before the formula is used.
Cyclotomic power_sum_A(const Letter& a, int k, int n, HarmonicEvaluator& ev);

// General symmetrization over a set partition C of the letter positions:
// lhs permutes the block-bracket word of C; rhs sums mu(B, C) * rho_n(B(w))
// over partitions B coarser than C, with B(w) the iterated star product of
// B's block brackets.
SymmetrizedPair general_symmetrization(const SetPartition& C, const Word& w, int n,
                                       HarmonicEvaluator& ev);

}  // namespace euler

#endif
