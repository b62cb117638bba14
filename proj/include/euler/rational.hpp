#ifndef EULER_RATIONAL_HPP
#define EULER_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace euler {

// Exact coefficient arithmetic. All identity checks in the library are
// zero-tolerance comparisons of these types.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer factorial(int n)
{
    Integer f = 1;
    for (int t = 2; t <= n; ++t)
        f *= t;
    return f;
}

inline Integer integer_pow(Integer base, int e)
{
    Integer p = 1;
    while (e-- > 0)
        p *= base;
    return p;
}

}  // namespace euler

#endif
