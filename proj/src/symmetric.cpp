#include "euler/symmetric.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

namespace euler {

Word apply_permutation(const Word& w, std::span<const int> sigma)
{
    if (static_cast<int>(sigma.size()) != w.length())
        throw std::domain_error("apply_permutation: size mismatch");
    std::vector<Letter> letters;
    letters.reserve(sigma.size());
    for (int s : sigma)
        letters.push_back(w.letter(s));
    return Word(w.r(), std::move(letters));
}

namespace {

Letter block_bracket(const Word& w, const std::vector<int>& block)
{
    std::vector<Letter> letters;
    letters.reserve(block.size());
    for (int e : block)
        letters.push_back(w.letter(e));
    return bracket(letters);
}

// a single letter repeated k times, bracketed: [ka]
Letter repeated_bracket(const Letter& a, int k)
{
    return Letter(a.i * k, static_cast<int>((static_cast<long long>(a.j) * k) % a.r), a.r);
}

Word single(const Letter& a)
{
    return Word(a.r, {a});
}

template <typename Eval>
Cyclotomic permutation_sum(const Word& w, Eval&& eval)
{
    std::vector<int> sigma(static_cast<size_t>(w.length()));
    std::iota(sigma.begin(), sigma.end(), 0);
    Cyclotomic acc(w.r());
    do
        acc += eval(apply_permutation(w, sigma));
    while (std::next_permutation(sigma.begin(), sigma.end()));
    return acc;
}

}  // namespace

SymmetrizedPair symmetrize_A(const Word& w, int n, HarmonicEvaluator& ev)
{
    if (w.empty())
        throw std::domain_error("symmetrize_A: empty word");
    const int r = w.r();
    Cyclotomic lhs = permutation_sum(w, [&](const Word& u) { return ev.A(u, n); });
    Cyclotomic rhs(r);
    for (const SetPartition& B : enumerate_set_partitions(w.length())) {
        Cyclotomic prod = Cyclotomic::one(r);
        for (const auto& block : B.blocks())
            prod *= ev.A(single(block_bracket(w, block)), n);
        prod *= Rational(c_coefficient(B));
        rhs += prod;
    }
    return {lhs, rhs};
}

SymmetrizedPair symmetrize_S(const Word& w, int n, HarmonicEvaluator& ev)
{
    if (w.empty())
        throw std::domain_error("symmetrize_S: empty word");
    const int r = w.r();
    Cyclotomic lhs = permutation_sum(w, [&](const Word& u) { return ev.S(u, n); });
    Cyclotomic rhs(r);
    for (const SetPartition& B : enumerate_set_partitions(w.length())) {
        Cyclotomic prod = Cyclotomic::one(r);
        for (const auto& block : B.blocks())
            prod *= ev.A(single(block_bracket(w, block)), n);
        prod *= Rational(abs(c_coefficient(B)));
        rhs += prod;
    }
    return {lhs, rhs};
}

namespace {

// shared integer-partition sum of the two power formulas; the per-part
// factor is 1/b (weak case) or (-1)^{b-1}/b (strict case)
Cyclotomic power_sum(const Letter& a, int k, int n, HarmonicEvaluator& ev, bool signed_parts)
{
    if (k < 1)
        throw std::domain_error("power_sum: k must be positive");
    Cyclotomic acc(a.r);
    for (const IntegerPartition& p : enumerate_integer_partitions(k)) {
        Rational coeff(1);
        for (int m : p.multiplicities())
            if (m > 1)
                coeff /= Rational(factorial(m));
        Cyclotomic prod = Cyclotomic::one(a.r);
        for (int b : p.parts()) {
            prod *= ev.A(single(repeated_bracket(a, b)), n);
            Rational f(1, b);
            if (signed_parts && b % 2 == 0)
                f = -f;
            coeff *= f;
        }
        prod *= coeff;
        acc += prod;
    }
    return acc;
}

// The sign pattern of the strict-case formula is confirmed against the
// nested-sum oracle once per ambient index before the formula is used.
void confirm_power_sum_signs(int r)
{
    static std::mutex mutex;
    static std::set<int> confirmed;
    std::lock_guard<std::mutex> lock(mutex);
    if (confirmed.count(r))
        return;
    HarmonicEvaluator ev;
    for (int j : {0, r - 1}) {
        Letter a(1, j, r);
        for (int k = 2; k <= 3; ++k) {
            Word power(r, std::vector<Letter>(static_cast<size_t>(k), a));
            for (int n = 2; n <= 4; ++n)
                if (!(power_sum(a, k, n, ev, true) == eval_A_bruteforce(power, n)))
                    throw std::logic_error(
                        "power_sum_A: sign pattern failed its oracle confirmation");
        }
    }
    confirmed.insert(r);
}

}  // namespace

Cyclotomic power_sum_S(const Letter& a, int k, int n, HarmonicEvaluator& ev)
{
    return power_sum(a, k, n, ev, false);
}

Cyclotomic power_sum_A(const Letter& a, int k, int n, HarmonicEvaluator& ev)
{
    confirm_power_sum_signs(a.r);
    return power_sum(a, k, n, ev, true);
}

SymmetrizedPair general_symmetrization(const SetPartition& C, const Word& w, int n,
                                       HarmonicEvaluator& ev)
{
    if (C.ground_size() != w.length())
        throw std::domain_error("general_symmetrization: partition does not match word length");
    const int r = w.r();
    const int p = C.block_count();

    std::vector<Letter> block_letters;
    block_letters.reserve(static_cast<size_t>(p));
    for (const auto& block : C.blocks())
        block_letters.push_back(block_bracket(w, block));
    Word bracketed(r, block_letters);

    Cyclotomic lhs = permutation_sum(bracketed, [&](const Word& u) { return ev.A(u, n); });

    // partitions coarser than C correspond to partitions of C's block set
    Cyclotomic rhs(r);
    for (const SetPartition& grouping : enumerate_set_partitions(p)) {
        Integer mu = 1;
        AlgebraElement product = AlgebraElement::unit(r);
        for (const auto& group : grouping.blocks()) {
            std::vector<Letter> members;
            for (int t : group)
                members.push_back(block_letters[static_cast<size_t>(t)]);
            product = star(product, AlgebraElement::from_word(single(bracket(members))));
            Integer f = factorial(static_cast<int>(group.size()) - 1);
            mu *= (group.size() - 1) % 2 == 0 ? f : -f;
        }
        rhs += ev.rho(product, n) * Rational(mu);
    }
    return {lhs, rhs};
}

}  // namespace euler
