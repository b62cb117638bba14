#ifndef EULER_SERIALIZE_HPP
#define EULER_SERIALIZE_HPP

#include <iosfwd>
#include <string>

#include "euler/algebra.hpp"
#include "euler/cyclotomic.hpp"

namespace euler {

std::string to_string(const Rational& q);

// "z[1,0] z[2,1]"; the empty word prints as "1".
std::string to_string(const Word& w);

// Canonical expression: terms in grlex order, unit coefficients elided,
// signs folded into separators.  The zero element prints as "0"; every
// printed form re-parses to the same element.
std::string to_string(const AlgebraElement& x);

// Tensor terms as "<left> (x) <right>", same coefficient conventions.
std::string to_string(const TensorElement& x);

// Polynomial-in-e form with exact rational coefficients, e.g.
// "(3/2) + (-1/2)*e^1"; zero prints as "0".
std::string to_string(const Cyclotomic& c);

std::ostream& operator<<(std::ostream& os, const Word& w);
std::ostream& operator<<(std::ostream& os, const AlgebraElement& x);
std::ostream& operator<<(std::ostream& os, const TensorElement& x);
std::ostream& operator<<(std::ostream& os, const Cyclotomic& c);

}  // namespace euler

#endif
