#ifndef EULER_PARSER_HPP
#define EULER_PARSER_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "euler/algebra.hpp"

namespace euler {

struct ParseError : std::runtime_error {
    size_t position;
    ParseError(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " (at offset " + std::to_string(pos) + ")"), position(pos)
    {
    }
};

// Grammar (whitespace free between tokens):
//   expression := term (('+'|'-') term)*
//   term       := rational word | rational | word
//   word       := letter+ | '1'
//   letter     := 'z' '[' integer ',' integer ']'
//   rational   := '-'? digits ('/' digits)?
// A bare rational denotes that multiple of the unit word.  Letters are
// validated against the session's ambient index: a second subscript outside
// [0, r) is a domain error naming the letter.
AlgebraElement parse_word_expression(std::string_view text, int r);

// Source text paired with what it parsed to.
struct WordExpression {
    std::string source;
    AlgebraElement element;
};

inline WordExpression parse_expression(std::string_view text, int r)
{
    return {std::string(text), parse_word_expression(text, r)};
}

}  // namespace euler

#endif
