#include "euler/parser.hpp"

#include <cctype>

namespace euler {

namespace {

class Scanner {
public:
    Scanner(std::string_view text, int r) : text_(text), r_(r) {}

    AlgebraElement parse()
    {
        AlgebraElement out(r_);
        skip_ws();
        if (eof())
            throw ParseError("empty expression", pos_);
        out += term();
        skip_ws();
        while (!eof()) {
            char op = peek();
            if (op != '+' && op != '-')
                throw ParseError("expected '+' or '-'", pos_);
            ++pos_;
            skip_ws();
            AlgebraElement t = term();
            if (op == '-')
                t *= Rational(-1);
            out += t;
            skip_ws();
        }
        return out;
    }

private:
    std::string_view text_;
    int r_;
    size_t pos_ = 0;

    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void skip_ws()
    {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek())))
            ++pos_;
    }

    bool starts_rational() const
    {
        if (eof())
            return false;
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c)))
            return true;
        return c == '-' && pos_ + 1 < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]));
    }

    // '1' begins the unit word only when no '/' or digit follows, otherwise
    // it is a numeric coefficient
    bool starts_word() const
    {
        return !eof() && (peek() == 'z' || peek() == '1');
    }

    AlgebraElement term()
    {
        // the rational scan is maximal, so a '1' that continues numerically
        // ("12", "1/2") is read as a coefficient, never as the unit word
        if (starts_rational()) {
            Rational c = rational();
            skip_ws();
            if (starts_word())
                return AlgebraElement::from_term(word(), c);
            return AlgebraElement::from_term(Word(r_), c);
        }
        if (starts_word())
            return AlgebraElement::from_word(word());
        throw ParseError("expected a term", pos_);
    }

    Rational rational()
    {
        size_t start = pos_;
        if (peek() == '-')
            ++pos_;
        std::string digits = scan_digits();
        if (digits.empty())
            throw ParseError("expected digits", pos_);
        Integer num(std::string(text_.substr(start, pos_ - start)));
        Integer den = 1;
        if (!eof() && peek() == '/') {
            ++pos_;
            std::string d = scan_digits();
            if (d.empty())
                throw ParseError("expected denominator digits", pos_);
            den = Integer(d);
            if (den == 0)
                throw ParseError("zero denominator", pos_);
        }
        return Rational(num, den);
    }

    std::string scan_digits()
    {
        std::string out;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek())))
            out.push_back(text_[pos_++]);
        return out;
    }

    Word word()
    {
        if (peek() == '1') {
            ++pos_;
            return Word(r_);
        }
        std::vector<Letter> letters;
        while (!eof() && peek() == 'z') {
            letters.push_back(letter());
            skip_ws();
        }
        if (letters.empty())
            throw ParseError("expected a word", pos_);
        return Word(r_, std::move(letters));
    }

    Letter letter()
    {
        expect('z');
        skip_ws();
        expect('[');
        skip_ws();
        long i = integer();
        skip_ws();
        expect(',');
        skip_ws();
        long j = integer();
        skip_ws();
        expect(']');
        if (i < 1)
            throw ParseError("letter z[" + std::to_string(i) + "," + std::to_string(j) +
                                 "]: first subscript must be positive",
                             pos_);
        if (j < 0 || j >= r_)
            throw std::domain_error("letter z[" + std::to_string(i) + "," + std::to_string(j) +
                                    "]: second subscript out of [0, " + std::to_string(r_) +
                                    ")");
        return Letter(static_cast<int>(i), static_cast<int>(j), r_);
    }

    long integer()
    {
        size_t start = pos_;
        if (!eof() && peek() == '-')
            ++pos_;
        std::string digits = scan_digits();
        if (digits.empty())
            throw ParseError("expected an integer", pos_);
        return std::stol(std::string(text_.substr(start, pos_ - start)));
    }

    void expect(char c)
    {
        if (eof() || peek() != c)
            throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }
};

}  // namespace

AlgebraElement parse_word_expression(std::string_view text, int r)
{
    if (r < 1)
        throw std::domain_error("parse_word_expression: r must be positive");
    return Scanner(text, r).parse();
}

}  // namespace euler
