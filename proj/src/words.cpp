#include "euler/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace euler {

Word::Word(int r) : r_(r)
{
    if (r_ < 1)
        throw std::domain_error("word: ambient index r must be positive");
}

Word::Word(int r, std::vector<Letter> letters) : r_(r), letters_(std::move(letters))
{
    if (r_ < 1)
        throw std::domain_error("word: ambient index r must be positive");
    for (const Letter& a : letters_)
        if (a.r != r_)
            throw std::domain_error("word: letter of foreign ambient index");
}

int Word::degree() const
{
    int d = 0;
    for (const Letter& a : letters_)
        d += a.i;
    return d;
}

Word Word::subword(int from, int count) const
{
    if (from < 0 || count < 0 || from + count > length())
        throw std::domain_error("subword: range out of bounds");
    std::vector<Letter> part(letters_.begin() + from, letters_.begin() + from + count);
    return Word(r_, std::move(part));
}

Word prepend(const Letter& a, const Word& w)
{
    std::vector<Letter> letters;
    letters.reserve(static_cast<size_t>(w.length()) + 1);
    letters.push_back(a);
    letters.insert(letters.end(), w.letters().begin(), w.letters().end());
    return Word(w.r(), std::move(letters));
}

Word concat(const Word& u, const Word& v)
{
    if (u.r() != v.r())
        throw std::domain_error("concat: mismatched ambient index");
    std::vector<Letter> letters = u.letters();
    letters.insert(letters.end(), v.letters().begin(), v.letters().end());
    return Word(u.r(), std::move(letters));
}

bool grlex_less(const Word& a, const Word& b)
{
    int da = a.degree(), db = b.degree();
    if (da != db)
        return da < db;
    if (a.length() != b.length())
        return a.length() < b.length();
    for (int t = 0; t < a.length(); ++t) {
        const Letter &x = a.letter(t), &y = b.letter(t);
        if (!(x == y))
            return letter_less(x, y);
    }
    return false;
}

bool lex_less(const Word& a, const Word& b, const LetterOrder& order)
{
    int m = std::min(a.length(), b.length());
    for (int t = 0; t < m; ++t) {
        const Letter &x = a.letter(t), &y = b.letter(t);
        if (order(x, y))
            return true;
        if (order(y, x))
            return false;
    }
    return a.length() < b.length();
}

bool lex_less(const Word& a, const Word& b)
{
    return lex_less(a, b, letter_less);
}

Word reverse(const Word& w)
{
    std::vector<Letter> letters(w.letters().rbegin(), w.letters().rend());
    return Word(w.r(), std::move(letters));
}

Word act_on_word(const Composition& I, const Word& w)
{
    if (I.total() != w.length())
        throw std::domain_error("act_on_word: total(I) != length(w)");
    std::vector<Letter> out;
    out.reserve(static_cast<size_t>(I.length()));
    int pos = 0;
    for (int block : I.parts()) {
        out.push_back(bracket(std::span<const Letter>(w.letters().data() + pos,
                                                      static_cast<size_t>(block))));
        pos += block;
    }
    return Word(w.r(), std::move(out));
}

std::vector<Word> coarsenings(const Word& w)
{
    if (w.empty())
        return {w};
    std::vector<Word> out;
    for (const Composition& J : enumerate_compositions(w.length()))
        out.push_back(act_on_word(J, w));
    return out;
}

bool is_lyndon(const Word& w, const LetterOrder& order)
{
    if (w.empty())
        throw std::domain_error("is_lyndon: empty word");
    for (int s = 1; s < w.length(); ++s)
        if (!lex_less(w, w.suffix_from(s), order))
            return false;
    return true;
}

bool is_lyndon(const Word& w)
{
    return is_lyndon(w, letter_less);
}

int mobius_integer(long n)
{
    if (n < 1)
        throw std::domain_error("mobius_integer: argument must be positive");
    int sign = 1;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0)
                return 0;
            sign = -sign;
        }
    }
    if (n > 1)
        sign = -sign;
    return sign;
}

Integer lyndon_count(int n, int r)
{
    if (n < 1 || r < 1)
        throw std::domain_error("lyndon_count: n and r must be positive");
    if (n == 1)
        return r;
    Integer sum = 0;
    for (int d = 1; d <= n; ++d)
        if (n % d == 0)
            sum += Integer(mobius_integer(n / d)) * integer_pow(r + 1, d);
    return sum / n;
}

std::vector<Word> enumerate_words(int n, int r)
{
    if (n < 0)
        throw std::domain_error("enumerate_words: negative degree");
    if (r < 1)
        throw std::domain_error("enumerate_words: r must be positive");
    if (n == 0)
        return {Word(r)};
    std::vector<Word> out;
    for (const Composition& I : enumerate_compositions(n)) {
        int k = I.length();
        std::vector<int> js(static_cast<size_t>(k), 0);
        for (;;) {
            std::vector<Letter> letters;
            letters.reserve(static_cast<size_t>(k));
            for (int t = 0; t < k; ++t)
                letters.emplace_back(I.parts()[static_cast<size_t>(t)],
                                     js[static_cast<size_t>(t)], r);
            out.emplace_back(r, std::move(letters));
            int t = k - 1;
            while (t >= 0 && js[static_cast<size_t>(t)] == r - 1)
                js[static_cast<size_t>(t--)] = 0;
            if (t < 0)
                break;
            ++js[static_cast<size_t>(t)];
        }
    }
    std::sort(out.begin(), out.end(), grlex_less);
    return out;
}

size_t WordHash::operator()(const Word& w) const
{
    size_t h = static_cast<size_t>(w.r()) * 1000003u;
    for (const Letter& a : w.letters()) {
        h ^= static_cast<size_t>(a.i) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h ^= static_cast<size_t>(a.j) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

}  // namespace euler
