#ifndef EULER_LETTERS_HPP
#define EULER_LETTERS_HPP

#include <cassert>
#include <functional>
#include <span>
#include <stdexcept>

namespace euler {

// Letter z_{i,j} of the index-r alphabet: exponent weight i >= 1 and
// root-of-unity index 0 <= j < r.  Letters of different ambient index r
// never meet in one word.
struct Letter {
    int i;
    int j;
    int r;

    Letter(int i_, int j_, int r_) : i(i_), j(j_), r(r_)
    {
        if (r < 1)
            throw std::domain_error("letter: ambient index r must be positive");
        if (i < 1)
            throw std::domain_error("letter: first subscript must be positive");
        if (j < 0 || j >= r)
            throw std::domain_error("letter: second subscript out of [0, r)");
    }

    friend bool operator==(const Letter& a, const Letter& b) = default;
};

// Canonical total order: lexicographic on (i, j).
inline bool letter_less(const Letter& a, const Letter& b)
{
    assert(a.r == b.r);
    if (a.i != b.i)
        return a.i < b.i;
    return a.j < b.j;
}

// Pluggable total order on letters; extends lexicographically to words.
using LetterOrder = std::function<bool(const Letter&, const Letter&)>;

// [a_1,...,a_n]: the letter whose first subscript is the sum of the first
// subscripts and whose second subscript is the mod-r sum of the second ones.
inline Letter bracket(std::span<const Letter> letters)
{
    if (letters.empty())
        throw std::domain_error("bracket: empty letter sequence");
    int r = letters.front().r;
    long long i = 0, j = 0;
    for (const Letter& a : letters) {
        if (a.r != r)
            throw std::domain_error("bracket: letters of mixed ambient index");
        i += a.i;
        j += a.j;
    }
    return Letter(static_cast<int>(i), static_cast<int>(j % r), r);
}

}  // namespace euler

#endif
