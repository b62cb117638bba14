#ifndef EULER_WORDS_HPP
#define EULER_WORDS_HPP

#include <cstddef>
#include <vector>

#include "euler/compositions.hpp"
#include "euler/letters.hpp"
#include "euler/rational.hpp"

namespace euler {

// Noncommutative word over the index-r alphabet.  The empty word is the
// algebra unit 1; it still carries the ambient index r.
class Word {
public:
    explicit Word(int r);
    Word(int r, std::vector<Letter> letters);

    int r() const { return r_; }
    int length() const { return static_cast<int>(letters_.size()); }
    bool empty() const { return letters_.empty(); }
    int degree() const;  // |w| = sum of first subscripts
    const std::vector<Letter>& letters() const& { return letters_; }
    std::vector<Letter> letters() && { return std::move(letters_); }
    const Letter& letter(int t) const { return letters_[static_cast<size_t>(t)]; }

    // Contiguous piece of `count` letters starting at position `from`.
    Word subword(int from, int count) const;
    Word prefix(int count) const { return subword(0, count); }
    Word suffix_from(int from) const { return subword(from, length() - from); }

    friend bool operator==(const Word& a, const Word& b)
    {
        return a.r_ == b.r_ && a.letters_ == b.letters_;
    }

private:
    int r_;
    std::vector<Letter> letters_;
};

Word prepend(const Letter& a, const Word& w);
Word concat(const Word& u, const Word& v);

// Canonical term order: graded lexicographic by (degree, length, letters).
bool grlex_less(const Word& a, const Word& b);

struct GrlexLess {
    bool operator()(const Word& a, const Word& b) const { return grlex_less(a, b); }
};

// operator< is the canonical term order
inline bool operator<(const Word& a, const Word& b)
{
    return grlex_less(a, b);
}

// Plain lexicographic word order extending a letter order; a proper prefix
// precedes its extensions.  This is the order behind Lyndon-ness.
bool lex_less(const Word& a, const Word& b, const LetterOrder& order);
bool lex_less(const Word& a, const Word& b);

Word reverse(const Word& w);

// I[w]: brackets consecutive blocks of w, block sizes given by the parts
// of I.  Requires total(I) == length(w).
Word act_on_word(const Composition& I, const Word& w);

// {I[w] : I in C(l(w))} in composition enumeration order, duplicates kept.
// The empty word coarsens to itself only.
std::vector<Word> coarsenings(const Word& w);

// True iff w is lexicographically smaller than each of its proper right
// factors.  The empty word is a domain error.
bool is_lyndon(const Word& w, const LetterOrder& order);
bool is_lyndon(const Word& w);

// Moebius function on positive integers (trial factorization).
int mobius_integer(long n);

// Number of Lyndon words of degree n over the index-r alphabet.  For n >= 2
// this is (1/n) sum_{d|n} mu(n/d) (r+1)^d; the degree-1 count follows the
// enumeration truth (exactly r single letters) rather than the formula,
// whose inversion argument only applies from degree 2 on.
Integer lyndon_count(int n, int r);

// All words of degree exactly n, canonical (grlex) order.
std::vector<Word> enumerate_words(int n, int r);

struct WordHash {
    size_t operator()(const Word& w) const;
};

}  // namespace euler

#endif
