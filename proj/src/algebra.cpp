#include "euler/algebra.hpp"

#include <stdexcept>
#include <unordered_map>

namespace euler {

AlgebraElement AlgebraElement::unit(int r)
{
    return from_word(Word(r));
}

AlgebraElement AlgebraElement::from_word(const Word& w)
{
    return from_term(w, Rational(1));
}

AlgebraElement AlgebraElement::from_term(const Word& w, const Rational& c)
{
    AlgebraElement x(w.r());
    x.add_term(w, c);
    return x;
}

Rational AlgebraElement::coefficient(const Word& w) const
{
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

void AlgebraElement::add_term(const Word& w, const Rational& c)
{
    if (w.r() != r_)
        throw std::domain_error("algebra element: word of foreign ambient index");
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other)
{
    if (other.r_ != r_)
        throw std::domain_error("algebra element: mismatched ambient index");
    for (const auto& [w, c] : other.terms_)
        add_term(w, c);
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other)
{
    if (other.r_ != r_)
        throw std::domain_error("algebra element: mismatched ambient index");
    for (const auto& [w, c] : other.terms_)
        add_term(w, -c);
    return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, coeff] : terms_)
        coeff *= c;
    return *this;
}

void TensorElement::add_term(const Word& left, const Word& right, const Rational& c)
{
    if (left.r() != r_ || right.r() != r_)
        throw std::domain_error("tensor element: word of foreign ambient index");
    if (c == 0)
        return;
    auto key = std::make_pair(left, right);
    auto [it, inserted] = terms_.emplace(std::move(key), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

TensorElement& TensorElement::operator+=(const TensorElement& other)
{
    if (other.r_ != r_)
        throw std::domain_error("tensor element: mismatched ambient index");
    for (const auto& [key, c] : other.terms_)
        add_term(key.first, key.second, c);
    return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& other)
{
    if (other.r_ != r_)
        throw std::domain_error("tensor element: mismatched ambient index");
    for (const auto& [key, c] : other.terms_)
        add_term(key.first, key.second, -c);
    return *this;
}

TensorElement& TensorElement::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [key, coeff] : terms_)
        coeff *= c;
    return *this;
}

namespace {

struct WordPairHash {
    size_t operator()(const std::pair<Word, Word>& p) const
    {
        WordHash h;
        return h(p.first) * 0x9e3779b97f4a7c15ULL + h(p.second);
    }
};

using ProductCache =
    std::unordered_map<std::pair<Word, Word>, AlgebraElement, WordPairHash>;

AlgebraElement prepend_all(const Letter& a, const AlgebraElement& x)
{
    AlgebraElement out(x.r());
    for (const auto& [w, c] : x.terms())
        out.add_term(prepend(a, w), c);
    return out;
}

// Shared recursion of the quasi-shuffle product and its signed overline
// twin; bracket_sign is +1 or -1 on the merged term.
AlgebraElement word_product(const Word& u, const Word& v, int bracket_sign,
                            ProductCache& cache)
{
    if (u.empty())
        return AlgebraElement::from_word(v);
    if (v.empty())
        return AlgebraElement::from_word(u);
    // the product is commutative; keep one orientation per pair
    const Word& a = grlex_less(v, u) ? v : u;
    const Word& b = grlex_less(v, u) ? u : v;
    auto key = std::make_pair(a, b);
    if (auto it = cache.find(key); it != cache.end())
        return it->second;

    const Letter ha = a.letter(0);
    const Letter hb = b.letter(0);
    const Word ta = a.suffix_from(1);
    const Word tb = b.suffix_from(1);

    AlgebraElement out = prepend_all(ha, word_product(ta, b, bracket_sign, cache));
    out += prepend_all(hb, word_product(a, tb, bracket_sign, cache));
    AlgebraElement merged =
        prepend_all(bracket(std::array<Letter, 2>{ha, hb}), word_product(ta, tb, bracket_sign, cache));
    if (bracket_sign < 0)
        out -= merged;
    else
        out += merged;

    cache.emplace(std::move(key), out);
    return out;
}

ProductCache& star_cache()
{
    thread_local ProductCache cache;
    return cache;
}

ProductCache& overline_star_cache()
{
    thread_local ProductCache cache;
    return cache;
}

}  // namespace

AlgebraElement star(const Word& u, const Word& v)
{
    if (u.r() != v.r())
        throw std::domain_error("star: mismatched ambient index");
    return word_product(u, v, +1, star_cache());
}

AlgebraElement star(const AlgebraElement& x, const AlgebraElement& y)
{
    if (x.r() != y.r())
        throw std::domain_error("star: mismatched ambient index");
    AlgebraElement out(x.r());
    for (const auto& [wu, cu] : x.terms())
        for (const auto& [wv, cv] : y.terms()) {
            AlgebraElement part = star(wu, wv);
            part *= cu * cv;
            out += part;
        }
    return out;
}

TensorElement coproduct(const Word& w)
{
    TensorElement out(w.r());
    for (int p = 0; p <= w.length(); ++p)
        out.add_term(w.prefix(p), w.suffix_from(p), Rational(1));
    return out;
}

TensorElement coproduct(const AlgebraElement& x)
{
    TensorElement out(x.r());
    for (const auto& [w, c] : x.terms())
        for (int p = 0; p <= w.length(); ++p)
            out.add_term(w.prefix(p), w.suffix_from(p), c);
    return out;
}

Rational counit(const AlgebraElement& x)
{
    return x.coefficient(Word(x.r()));
}

AlgebraElement antipode_via_compositions(const Word& w)
{
    if (w.empty())
        return AlgebraElement::unit(w.r());
    const Word rw = reverse(w);
    AlgebraElement out(w.r());
    for (const Composition& I : enumerate_compositions(w.length()))
        out.add_term(act_on_word(I, rw), Rational(1));
    if (w.length() % 2 != 0)
        out *= Rational(-1);
    return out;
}

AlgebraElement antipode_via_products(const Word& w)
{
    if (w.empty())
        return AlgebraElement::unit(w.r());
    AlgebraElement out(w.r());
    for (const Composition& I : enumerate_compositions(w.length())) {
        AlgebraElement product = AlgebraElement::unit(w.r());
        int pos = 0;
        for (int part : I.parts()) {
            product = star(product, AlgebraElement::from_word(w.subword(pos, part)));
            pos += part;
        }
        if (I.length() % 2 != 0)
            product *= Rational(-1);
        out += product;
    }
    return out;
}

AlgebraElement antipode(const Word& w)
{
    return antipode_via_compositions(w);
}

AlgebraElement antipode(const AlgebraElement& x)
{
    AlgebraElement out(x.r());
    for (const auto& [w, c] : x.terms()) {
        AlgebraElement part = antipode_via_compositions(w);
        part *= c;
        out += part;
    }
    return out;
}

AlgebraElement overline(const Word& w)
{
    AlgebraElement out(w.r());
    for (const Word& v : coarsenings(w))
        out.add_term(v, Rational(1));
    return out;
}

AlgebraElement overline(const AlgebraElement& x)
{
    AlgebraElement out(x.r());
    for (const auto& [w, c] : x.terms()) {
        AlgebraElement part = overline(w);
        part *= c;
        out += part;
    }
    return out;
}

AlgebraElement overline_star(const Word& u, const Word& v)
{
    if (u.r() != v.r())
        throw std::domain_error("overline_star: mismatched ambient index");
    return word_product(u, v, -1, overline_star_cache());
}

AlgebraElement overline_star(const AlgebraElement& x, const AlgebraElement& y)
{
    if (x.r() != y.r())
        throw std::domain_error("overline_star: mismatched ambient index");
    AlgebraElement out(x.r());
    for (const auto& [wu, cu] : x.terms())
        for (const auto& [wv, cv] : y.terms()) {
            AlgebraElement part = overline_star(wu, wv);
            part *= cu * cv;
            out += part;
        }
    return out;
}

AlgebraElement reverse_linear(const AlgebraElement& x)
{
    AlgebraElement out(x.r());
    for (const auto& [w, c] : x.terms())
        out.add_term(reverse(w), c);
    return out;
}

}  // namespace euler
