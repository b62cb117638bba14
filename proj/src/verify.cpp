#include "euler/verify.hpp"

#include <chrono>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

#include "euler/harmonic.hpp"
#include "euler/serialize.hpp"
#include "euler/symmetric.hpp"

namespace euler {

Word random_word(Lcg& gen, int r, int max_degree, int max_length)
{
    for (;;) {
        int k = 1 + gen.below(max_length);
        std::vector<Letter> letters;
        letters.reserve(static_cast<size_t>(k));
        int degree = 0;
        for (int t = 0; t < k; ++t) {
            int i = 1 + gen.below(max_degree);
            int j = gen.below(r);
            degree += i;
            letters.emplace_back(i, j, r);
        }
        if (degree <= max_degree)
            return Word(r, std::move(letters));
    }
}

namespace {

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double ms() const
    {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

// all words with degree <= max_degree and length <= max_length
std::vector<Word> word_range(const VerifyOptions& opt)
{
    std::vector<Word> out;
    out.push_back(Word(opt.r));
    for (int n = 1; n <= opt.max_degree; ++n)
        for (const Word& w : enumerate_words(n, opt.r))
            if (w.length() <= opt.max_length)
                out.push_back(w);
    return out;
}

void check(VerifyReport& report, const std::string& case_id, const AlgebraElement& lhs,
           const AlgebraElement& rhs)
{
    ++report.cases;
    if (!(lhs == rhs))
        report.failures.push_back({case_id, to_string(lhs), to_string(rhs)});
}

void check(VerifyReport& report, const std::string& case_id, const Cyclotomic& lhs,
           const Cyclotomic& rhs)
{
    ++report.cases;
    if (!(lhs == rhs))
        report.failures.push_back({case_id, to_string(lhs), to_string(rhs)});
}

// (coproduct x id) and (id x coproduct) applied to the coproduct, both
// routed through the library map so the comparison is not structural
using TripleMap = std::map<std::tuple<Word, Word, Word>, Rational>;

TripleMap triple_coproduct_left(const Word& w)
{
    TripleMap out;
    for (const auto& [key, c] : coproduct(w).terms())
        for (const auto& [inner, d] : coproduct(key.first).terms()) {
            auto& entry = out[{inner.first, inner.second, key.second}];
            entry += c * d;
            if (entry == 0)
                out.erase({inner.first, inner.second, key.second});
        }
    return out;
}

TripleMap triple_coproduct_right(const Word& w)
{
    TripleMap out;
    for (const auto& [key, c] : coproduct(w).terms())
        for (const auto& [inner, d] : coproduct(key.second).terms()) {
            auto& entry = out[{key.first, inner.first, inner.second}];
            entry += c * d;
            if (entry == 0)
                out.erase({key.first, inner.first, inner.second});
        }
    return out;
}

AlgebraElement convolution_with_antipode(const Word& w, bool antipode_left)
{
    AlgebraElement acc(w.r());
    for (const auto& [key, c] : coproduct(w).terms()) {
        AlgebraElement left = antipode_left ? antipode(key.first)
                                            : AlgebraElement::from_word(key.first);
        AlgebraElement right = antipode_left ? AlgebraElement::from_word(key.second)
                                             : antipode(key.second);
        AlgebraElement part = star(left, right);
        part *= c;
        acc += part;
    }
    return acc;
}

}  // namespace

VerifyReport verify_hopf(const VerifyOptions& opt)
{
    Timer timer;
    VerifyReport report;
    report.suite = "hopf";
    const std::vector<Word> words = word_range(opt);

    for (const Word& w : words) {
        const std::string id = to_string(w);
        // coassociativity on the triple-split multiset
        {
            ++report.cases;
            auto left = triple_coproduct_left(w), right = triple_coproduct_right(w);
            if (!(left == right))
                report.failures.push_back({"coassociativity of " + id, "(differs)", ""});
        }
        // counit laws
        {
            AlgebraElement left(opt.r), right(opt.r);
            for (const auto& [key, c] : coproduct(w).terms()) {
                if (key.first.empty())
                    left.add_term(key.second, c);
                if (key.second.empty())
                    right.add_term(key.first, c);
            }
            check(report, "left counit law on " + id, left, AlgebraElement::from_word(w));
            check(report, "right counit law on " + id, right, AlgebraElement::from_word(w));
        }
        // antipode convolution
        {
            AlgebraElement target(opt.r);
            if (w.empty())
                target = AlgebraElement::unit(opt.r);
            check(report, "antipode convolution (S x id) on " + id,
                  convolution_with_antipode(w, true), target);
            check(report, "antipode convolution (id x S) on " + id,
                  convolution_with_antipode(w, false), target);
        }
    }

    // product laws on sampled elements
    Lcg gen(opt.seed);
    for (int t = 0; t < 40; ++t) {
        Word u = random_word(gen, opt.r, opt.max_degree, opt.max_length);
        Word v = random_word(gen, opt.r, opt.max_degree, opt.max_length);
        Word x = random_word(gen, opt.r, opt.max_degree, opt.max_length);
        const std::string id = "(" + to_string(u) + ", " + to_string(v) + ", " + to_string(x) + ")";
        check(report, "commutativity on " + id, star(u, v), star(v, u));
        check(report, "associativity on " + id,
              star(star(u, v), AlgebraElement::from_word(x)),
              star(AlgebraElement::from_word(u), star(v, x)));
        check(report, "unit law on " + id, star(Word(opt.r), u), AlgebraElement::from_word(u));
        // grading
        ++report.cases;
        for (const auto& [w, c] : star(u, v).terms())
            if (w.degree() != u.degree() + v.degree()) {
                report.failures.push_back({"grading on " + id, to_string(w), ""});
                break;
            }
    }

    report.wall_ms = timer.ms();
    return report;
}

VerifyReport verify_antipode(const VerifyOptions& opt)
{
    Timer timer;
    VerifyReport report;
    report.suite = "antipode";
    const std::vector<Word> words = word_range(opt);

    for (const Word& w : words) {
        const std::string id = to_string(w);
        check(report, "antipode formulas agree on " + id, antipode_via_products(w),
              antipode_via_compositions(w));
        check(report, "antipode involution on " + id, antipode(antipode(w)),
              AlgebraElement::from_word(w));
        check(report, "overline versus antipode on " + id, overline(w),
              antipode(reverse(w)) * Rational(w.length() % 2 == 0 ? 1 : -1));
        // overline inversion: w = sum over factorizations of R(w) of
        // (-1)^{l(w)-k} obar(w_1) * ... * obar(w_k)
        if (!w.empty() && w.length() <= 5) {
            AlgebraElement acc(opt.r);
            const Word rw = reverse(w);
            for (const Composition& J : enumerate_compositions(w.length())) {
                AlgebraElement product = AlgebraElement::unit(opt.r);
                int pos = 0;
                for (int part : J.parts()) {
                    product = star(product, overline(rw.subword(pos, part)));
                    pos += part;
                }
                product *= Rational((w.length() - J.length()) % 2 == 0 ? 1 : -1);
                acc += product;
            }
            check(report, "overline inversion on " + id, acc, AlgebraElement::from_word(w));
        }
    }

    Lcg gen(opt.seed);
    for (int t = 0; t < 60; ++t) {
        Word u = random_word(gen, opt.r, opt.max_degree, opt.max_length);
        Word v = random_word(gen, opt.r, opt.max_degree, opt.max_length);
        const std::string id = "(" + to_string(u) + ", " + to_string(v) + ")";
        check(report, "antipode product homomorphism on " + id,
              antipode(star(u, v)), star(antipode(u), antipode(v)));
        // signed overline product rule against the word-basis expansion
        AlgebraElement expanded(opt.r);
        for (const auto& [w, c] : overline_star(u, v).terms()) {
            AlgebraElement part = overline(w);
            part *= c;
            expanded += part;
        }
        check(report, "overline product rule on " + id, expanded,
              star(overline(u), overline(v)));
    }

    report.wall_ms = timer.ms();
    return report;
}

VerifyReport verify_homomorphism(const VerifyOptions& opt)
{
    Timer timer;
    VerifyReport report;
    report.suite = "homomorphism";
    HarmonicEvaluator ev;

    // oracle equivalence on a compact exhaustive range
    const int degree_cap = std::min(opt.max_degree, 4);
    const int length_cap = std::min(opt.max_length, 3);
    const int n_cap = std::min(opt.max_n, 6);
    for (int d = 1; d <= degree_cap; ++d)
        for (const Word& w : enumerate_words(d, opt.r)) {
            if (w.length() > length_cap)
                continue;
            for (int n = 0; n <= n_cap; ++n) {
                check(report, "A oracle on " + to_string(w) + ", n=" + std::to_string(n),
                      ev.A(w, n), eval_A_bruteforce(w, n));
                check(report, "S oracle on " + to_string(w) + ", n=" + std::to_string(n),
                      ev.S(w, n), eval_S_bruteforce(w, n));
            }
        }

    Lcg gen(opt.seed);
    for (int t = 0; t < 100; ++t) {
        Word u = random_word(gen, opt.r, opt.max_degree, opt.max_length);
        Word v = random_word(gen, opt.r, opt.max_degree, opt.max_length);
        int n = gen.below(opt.max_n + 1);
        const std::string id =
            "(" + to_string(u) + ", " + to_string(v) + "), n=" + std::to_string(n);
        check(report, "evaluation homomorphism on " + id, ev.rho(star(u, v), n),
              ev.A(u, n) * ev.A(v, n));
    }

    report.wall_ms = timer.ms();
    return report;
}

VerifyReport verify_duality(const VerifyOptions& opt)
{
    Timer timer;
    VerifyReport report;
    report.suite = "duality";
    HarmonicEvaluator ev;
    const std::vector<Word> words = word_range(opt);

    for (const Word& w : words) {
        if (w.empty())
            continue;
        const std::string id = to_string(w);
        for (int n = 0; n <= opt.max_n; n += 2) {
            const std::string at = id + ", n=" + std::to_string(n);
            // weak sums through strict sums over coarsenings
            check(report, "weak-to-strict on " + at, ev.S(w, n), ev.rho(overline(w), n));
            // Moebius inversion back to the strict sum
            check(report, "strict-from-weak on " + at,
                  ev.rho_overline(a_from_s_expansion(w), n), ev.A(w, n));
            // product expansions
            check(report, "product expansion of S on " + at,
                  eval_signed_products(product_expansion_S(w), 'A', n, ev), ev.S(w, n));
            check(report, "product expansion of A on " + at,
                  eval_signed_products(product_expansion_A(w), 'S', n, ev), ev.A(w, n));
            // length reduction
            if (w.length() >= 2) {
                DualityIdentity identity = duality_reduction(w);
                Cyclotomic lhs = ev.A(w, n) + ev.A(reverse(w), n) * identity.reversed_sign;
                Cyclotomic rhs = eval_signed_products(identity.products, 'A', n, ev);
                rhs += eval_signed_products(identity.coarser, 'A', n, ev);
                check(report, "length reduction on " + at, lhs, rhs);
            }
        }
        // structural: every right-hand term of the reduction is shorter
        if (w.length() >= 2) {
            ++report.cases;
            DualityIdentity identity = duality_reduction(w);
            bool shorter = true;
            for (const SignedProduct& term : identity.products)
                for (const Word& f : term.factors)
                    shorter = shorter && f.length() < w.length();
            for (const SignedProduct& term : identity.coarser)
                shorter = shorter && term.factors.front().length() < w.length();
            if (!shorter)
                report.failures.push_back({"length reduction shape on " + id, "", ""});
        }
    }

    report.wall_ms = timer.ms();
    return report;
}

VerifyReport verify_symmetric(const VerifyOptions& opt)
{
    Timer timer;
    VerifyReport report;
    report.suite = "symmetric";
    HarmonicEvaluator ev;

    const int length_cap = std::min(opt.max_length, 4);
    std::vector<Word> words;
    for (int d = 1; d <= std::min(opt.max_degree, 5); ++d)
        for (const Word& w : enumerate_words(d, opt.r))
            if (w.length() <= length_cap)
                words.push_back(w);

    for (const Word& w : words) {
        const std::string id = to_string(w);
        for (int n : {2, opt.max_n}) {
            SymmetrizedPair a = symmetrize_A(w, n, ev);
            check(report, "symmetrized strict sums on " + id + ", n=" + std::to_string(n),
                  a.lhs, a.rhs);
            SymmetrizedPair s = symmetrize_S(w, n, ev);
            check(report, "symmetrized weak sums on " + id + ", n=" + std::to_string(n),
                  s.lhs, s.rhs);
        }
    }

    // power sums
    for (int j : std::set<int>{0, opt.r - 1})
        for (int k = 1; k <= 4; ++k)
            for (int n : {3, opt.max_n}) {
                Letter a(1, j, opt.r);
                Word power(opt.r, std::vector<Letter>(static_cast<size_t>(k), a));
                const std::string id =
                    "a=z[1," + std::to_string(j) + "], k=" + std::to_string(k) +
                    ", n=" + std::to_string(n);
                check(report, "weak power sum on " + id, power_sum_S(a, k, n, ev),
                      ev.S(power, n));
                check(report, "strict power sum on " + id, power_sum_A(a, k, n, ev),
                      ev.A(power, n));
            }

    // general symmetrization over every partition of up to 4 positions
    Lcg gen(opt.seed);
    for (int k = 1; k <= std::min({4, opt.max_length, opt.max_degree}); ++k)
        for (int t = 0; t < 3; ++t) {
            Word w = [&] {
                for (;;) {
                    Word candidate = random_word(gen, opt.r, opt.max_degree, k);
                    if (candidate.length() == k)
                        return candidate;
                }
            }();
            for (const SetPartition& C : enumerate_set_partitions(k)) {
                SymmetrizedPair pair = general_symmetrization(C, w, opt.max_n, ev);
                check(report,
                      "general symmetrization of " + to_string(w) + " over " +
                          std::to_string(C.block_count()) + " blocks",
                      pair.lhs, pair.rhs);
            }
        }

    // Moebius recurrence on the partition lattice
    for (int k = 2; k <= 4; ++k) {
        const std::vector<SetPartition> all = enumerate_set_partitions(k);
        for (const SetPartition& C : all)
            for (const SetPartition& B : all) {
                if (!is_coarsening_of(B, C) || B == C)
                    continue;
                Integer sum = 0;
                for (const SetPartition& D : all)
                    if (is_coarsening_of(B, D) && is_coarsening_of(D, C))
                        sum += partition_mobius(D, C);
                ++report.cases;
                if (sum != 0)
                    report.failures.push_back(
                        {"Moebius recurrence at k=" + std::to_string(k), sum.str(), "0"});
            }
    }

    report.wall_ms = timer.ms();
    return report;
}

std::vector<VerifyReport> run_verify(const std::string& suite, const VerifyOptions& opt)
{
    if (suite == "hopf")
        return {verify_hopf(opt)};
    if (suite == "antipode")
        return {verify_antipode(opt)};
    if (suite == "homomorphism")
        return {verify_homomorphism(opt)};
    if (suite == "duality")
        return {verify_duality(opt)};
    if (suite == "symmetric")
        return {verify_symmetric(opt)};
    if (suite == "all")
        return {verify_hopf(opt), verify_antipode(opt), verify_homomorphism(opt),
                verify_duality(opt), verify_symmetric(opt)};
    throw std::domain_error("unknown verify suite: " + suite);
}

}  // namespace euler
