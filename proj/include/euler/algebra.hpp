#ifndef EULER_ALGEBRA_HPP
#define EULER_ALGEBRA_HPP

#include <map>
#include <utility>

#include "euler/rational.hpp"
#include "euler/words.hpp"

namespace euler {

// Finite linear combination of words with exact rational coefficients.
// Terms are kept in canonical (grlex) order and zero coefficients are never
// stored.  Values are immutable in spirit: every operation returns a fresh
// element, so instances can be shared freely across threads.
class AlgebraElement {
public:
    using TermMap = std::map<Word, Rational, GrlexLess>;

    explicit AlgebraElement(int r) : r_(r) {}

    static AlgebraElement unit(int r);
    static AlgebraElement from_word(const Word& w);
    static AlgebraElement from_term(const Word& w, const Rational& c);

    int r() const { return r_; }
    bool is_zero() const { return terms_.empty(); }
    // rvalues hand the map over by value so that iterating the terms of a
    // freshly computed element never dangles
    const TermMap& terms() const& { return terms_; }
    TermMap terms() && { return std::move(terms_); }
    Rational coefficient(const Word& w) const;

    // Accumulates c on w and drops the term if the total vanishes.
    void add_term(const Word& w, const Rational& c);

    AlgebraElement& operator+=(const AlgebraElement& other);
    AlgebraElement& operator-=(const AlgebraElement& other);
    AlgebraElement& operator*=(const Rational& c);

    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    friend AlgebraElement operator*(AlgebraElement a, const Rational& c) { return a *= c; }
    friend AlgebraElement operator*(const Rational& c, AlgebraElement a) { return a *= c; }
    friend AlgebraElement operator-(AlgebraElement a)
    {
        return a *= Rational(-1);
    }
    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b)
    {
        return a.r_ == b.r_ && a.terms_ == b.terms_;
    }

private:
    int r_;
    TermMap terms_;
};

// Element of the tensor square, the value domain of the coproduct.
class TensorElement {
public:
    struct KeyLess {
        bool operator()(const std::pair<Word, Word>& a, const std::pair<Word, Word>& b) const
        {
            if (!(a.first == b.first))
                return grlex_less(a.first, b.first);
            return grlex_less(a.second, b.second);
        }
    };
    using TermMap = std::map<std::pair<Word, Word>, Rational, KeyLess>;

    explicit TensorElement(int r) : r_(r) {}

    int r() const { return r_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const& { return terms_; }
    TermMap terms() && { return std::move(terms_); }

    void add_term(const Word& left, const Word& right, const Rational& c);

    TensorElement& operator+=(const TensorElement& other);
    TensorElement& operator-=(const TensorElement& other);
    TensorElement& operator*=(const Rational& c);

    friend bool operator==(const TensorElement& a, const TensorElement& b)
    {
        return a.r_ == b.r_ && a.terms_ == b.terms_;
    }

private:
    int r_;
    TermMap terms_;
};

// Quasi-shuffle product: bilinear extension of
//   aw * bv = a(w * bv) + b(aw * v) + [a,b](w * v),   1 * w = w * 1 = w.
// The word-level recursion is memoized in a per-thread cache; the cache is
// observationally transparent.
AlgebraElement star(const Word& u, const Word& v);
AlgebraElement star(const AlgebraElement& x, const AlgebraElement& y);

// Deconcatenation coproduct.
TensorElement coproduct(const Word& w);
TensorElement coproduct(const AlgebraElement& x);

// Coefficient of the empty word.
Rational counit(const AlgebraElement& x);

// Antipode.  The word-level map is computed by the composition formula
//   S(w) = (-1)^{l(w)} sum_{I in C(l(w))} I[reverse(w)],
// which has linear cost in the 2^{l-1} coarsenings; the iterated-product
// formula below is kept as an independent route to the same map.
AlgebraElement antipode(const Word& w);
AlgebraElement antipode(const AlgebraElement& x);

// S(w) = sum over decompositions w = w_1...w_k into nonempty subwords of
// (-1)^k w_1 * ... * w_k.  Oracle route; agrees with antipode() identically.
AlgebraElement antipode_via_products(const Word& w);

// (-1)^{l(w)} sum_{I in C(l(w))} I[reverse(w)].
AlgebraElement antipode_via_compositions(const Word& w);

// overline(w) = sum of all coarsenings of w, duplicates accumulated.
// Satisfies overline(w) = (-1)^{l(w)} S(R(w)).
AlgebraElement overline(const Word& w);
AlgebraElement overline(const AlgebraElement& x);

// Product of two overline-basis elements expressed again in the overline
// basis: the term map of the result holds overline-basis coordinates.  The
// recursion is the signed twin of the quasi-shuffle rule,
//   obar(aw) * obar(bv) = obar(a(w*bv)) + obar(b(aw*v)) - obar([a,b](w*v)).
AlgebraElement overline_star(const Word& u, const Word& v);
AlgebraElement overline_star(const AlgebraElement& x, const AlgebraElement& y);

// Linear extension of word reversal.
AlgebraElement reverse_linear(const AlgebraElement& x);

}  // namespace euler

#endif
