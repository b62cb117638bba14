#include "euler/harmonic.hpp"

#include <stdexcept>

namespace euler {

namespace {

// prod over positions t of e^{j_t n_t} / n_t^{i_t}, summed over chains
// selected by `strict`.
Cyclotomic nested_sum(const Word& w, int pos, int upper, bool strict)
{
    const int r = w.r();
    if (pos == w.length())
        return Cyclotomic::one(r);
    Cyclotomic acc(r);
    const Letter& a = w.letter(pos);
    // enough room must remain for the letters still to come
    int low = strict ? w.length() - pos : 1;
    for (int m = low; m <= upper; ++m) {
        Cyclotomic term = root_power(r, static_cast<long>(a.j) * m);
        term *= Rational(1, integer_pow(m, a.i));
        term *= nested_sum(w, pos + 1, strict ? m - 1 : m, strict);
        acc += term;
    }
    return acc;
}

}  // namespace

Cyclotomic eval_A_bruteforce(const Word& w, int n)
{
    if (n < 0)
        throw std::domain_error("eval_A_bruteforce: negative n");
    return nested_sum(w, 0, n, true);
}

Cyclotomic eval_S_bruteforce(const Word& w, int n)
{
    if (n < 0)
        throw std::domain_error("eval_S_bruteforce: negative n");
    return nested_sum(w, 0, n, false);
}

size_t HarmonicEvaluator::KeyHash::operator()(const std::pair<Word, int>& k) const
{
    return WordHash{}(k.first) * 0x9e3779b97f4a7c15ULL + static_cast<size_t>(k.second);
}

Cyclotomic HarmonicEvaluator::A(const Word& w, int n)
{
    if (n < 0)
        throw std::domain_error("harmonic evaluator: negative n");
    const int r = w.r();
    if (w.empty())
        return Cyclotomic::one(r);
    if (n < w.length())
        return Cyclotomic::zero(r);
    auto key = std::make_pair(w, n);
    if (auto it = cache_.find(key); it != cache_.end())
        return it->second;

    // column DP over suffixes: values[m] = A_{suffix}(m)
    std::vector<Cyclotomic> values(static_cast<size_t>(n) + 1, Cyclotomic::one(r));
    for (int s = w.length() - 1; s >= 0; --s) {
        const Letter& a = w.letter(s);
        std::vector<Cyclotomic> next(static_cast<size_t>(n) + 1, Cyclotomic::zero(r));
        for (int m = 1; m <= n; ++m) {
            Cyclotomic term = root_power(r, static_cast<long>(a.j) * m);
            term *= Rational(1, integer_pow(m, a.i));
            term *= values[static_cast<size_t>(m - 1)];
            next[static_cast<size_t>(m)] = next[static_cast<size_t>(m - 1)] + term;
        }
        values = std::move(next);
    }
    Cyclotomic result = values[static_cast<size_t>(n)];
    cache_.emplace(std::move(key), result);
    return result;
}

Cyclotomic HarmonicEvaluator::S(const Word& w, int n)
{
    Cyclotomic acc(w.r());
    for (const Word& u : coarsenings(w))
        acc += A(u, n);
    return acc;
}

Cyclotomic HarmonicEvaluator::rho(const AlgebraElement& x, int n)
{
    Cyclotomic acc(x.r());
    for (const auto& [w, c] : x.terms())
        acc += A(w, n) * c;
    return acc;
}

Cyclotomic HarmonicEvaluator::rho_overline(const AlgebraElement& coords, int n)
{
    Cyclotomic acc(coords.r());
    for (const auto& [w, c] : coords.terms())
        acc += S(w, n) * c;
    return acc;
}

Cyclotomic eval_A(const Word& w, int n)
{
    HarmonicEvaluator ev;
    return ev.A(w, n);
}

Cyclotomic eval_S(const Word& w, int n)
{
    HarmonicEvaluator ev;
    return ev.S(w, n);
}

HarmonicResult evaluate_harmonic(const Word& w, int n, char kind)
{
    if (kind != 'A' && kind != 'S')
        throw std::domain_error("evaluate_harmonic: kind must be 'A' or 'S'");
    return {w, n, kind, kind == 'A' ? eval_A(w, n) : eval_S(w, n)};
}

AlgebraElement a_from_s_expansion(const Word& w)
{
    if (w.empty())
        return AlgebraElement::unit(w.r());
    AlgebraElement coords(w.r());
    for (const Composition& J : enumerate_compositions(w.length())) {
        int sign = (w.length() - J.length()) % 2 == 0 ? 1 : -1;
        coords.add_term(act_on_word(J, w), Rational(sign));
    }
    return coords;
}

namespace {

std::vector<SignedProduct> signed_factorizations(const Word& w)
{
    if (w.empty())
        throw std::domain_error("product expansion: empty word");
    const Word rw = reverse(w);
    std::vector<SignedProduct> out;
    for (const Composition& J : enumerate_compositions(w.length())) {
        SignedProduct term;
        term.coeff = Rational((w.length() - J.length()) % 2 == 0 ? 1 : -1);
        int pos = 0;
        for (int part : J.parts()) {
            term.factors.push_back(rw.subword(pos, part));
            pos += part;
        }
        out.push_back(std::move(term));
    }
    return out;
}

}  // namespace

std::vector<SignedProduct> product_expansion_S(const Word& w)
{
    return signed_factorizations(w);
}

std::vector<SignedProduct> product_expansion_A(const Word& w)
{
    return signed_factorizations(w);
}

DualityIdentity duality_reduction(const Word& w)
{
    if (w.length() < 2)
        throw std::domain_error("duality_reduction: word of length below 2");
    DualityIdentity identity{w, Rational(w.length() % 2 == 0 ? 1 : -1), {}, {}};
    for (SignedProduct& term : signed_factorizations(w))
        if (term.factors.size() > 1)
            identity.products.push_back(std::move(term));
    for (const Composition& J : enumerate_compositions(w.length())) {
        if (J.length() == w.length())
            continue;  // the identity composition contributes A_w itself
        SignedProduct term;
        term.coeff = Rational(-1);
        term.factors.push_back(act_on_word(J, w));
        identity.coarser.push_back(std::move(term));
    }
    return identity;
}

Cyclotomic eval_signed_products(const std::vector<SignedProduct>& terms, char kind, int n,
                                HarmonicEvaluator& ev)
{
    if (terms.empty())
        throw std::domain_error("eval_signed_products: no terms");
    const int r = terms.front().factors.empty() ? 1 : terms.front().factors.front().r();
    Cyclotomic acc(r);
    for (const SignedProduct& term : terms) {
        Cyclotomic prod = Cyclotomic::one(r);
        for (const Word& factor : term.factors)
            prod *= (kind == 'S') ? ev.S(factor, n) : ev.A(factor, n);
        prod *= term.coeff;
        acc += prod;
    }
    return acc;
}

}  // namespace euler
