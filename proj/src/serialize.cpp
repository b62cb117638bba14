#include "euler/serialize.hpp"

#include <ostream>
#include <sstream>

namespace euler {

std::string to_string(const Rational& q)
{
    return q.str();
}

std::string to_string(const Word& w)
{
    if (w.empty())
        return "1";
    std::string out;
    for (int t = 0; t < w.length(); ++t) {
        if (t > 0)
            out += ' ';
        const Letter& a = w.letter(t);
        out += "z[" + std::to_string(a.i) + "," + std::to_string(a.j) + "]";
    }
    return out;
}

namespace {

// shared expression printer: coeff of 1 elided before nonempty words, signs
// folded into the separators
template <typename Terms, typename KeyPrinter>
std::string print_terms(const Terms& terms, KeyPrinter&& key)
{
    if (terms.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : terms) {
        bool neg = c < 0;
        Rational mag = neg ? Rational(-c) : c;
        if (!first)
            out += neg ? " - " : " + ";
        // a leading minus must stay attached to an explicit rational so the
        // printed form re-parses
        bool lead_minus = first && neg;
        first = false;
        std::string word_text = key(k);
        if (word_text == "1")
            out += (lead_minus ? "-" : "") + mag.str();
        else if (mag == 1)
            out += lead_minus ? "-1 " + word_text : word_text;
        else
            out += (lead_minus ? "-" : "") + mag.str() + " " + word_text;
    }
    return out;
}

}  // namespace

std::string to_string(const AlgebraElement& x)
{
    return print_terms(x.terms(), [](const Word& w) { return to_string(w); });
}

std::string to_string(const TensorElement& x)
{
    return print_terms(x.terms(), [](const std::pair<Word, Word>& k) {
        return to_string(k.first) + " (x) " + to_string(k.second);
    });
}

std::string to_string(const Cyclotomic& c)
{
    if (c.is_zero())
        return "0";
    bool pure_rational = true;
    for (size_t k = 1; k < c.coefficients().size(); ++k)
        if (c.coefficients()[k] != 0)
            pure_rational = false;
    if (pure_rational)
        return c.coefficients()[0].str();
    std::string out;
    bool first = true;
    for (size_t k = 0; k < c.coefficients().size(); ++k) {
        const Rational& q = c.coefficients()[k];
        if (q == 0)
            continue;
        if (!first)
            out += " + ";
        first = false;
        out += "(" + q.str() + ")";
        if (k > 0)
            out += "*e^" + std::to_string(k);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Word& w)
{
    return os << to_string(w);
}

std::ostream& operator<<(std::ostream& os, const AlgebraElement& x)
{
    return os << to_string(x);
}

std::ostream& operator<<(std::ostream& os, const TensorElement& x)
{
    return os << to_string(x);
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c)
{
    return os << to_string(c);
}

}  // namespace euler
