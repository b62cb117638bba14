#ifndef EULER_CYCLOTOMIC_HPP
#define EULER_CYCLOTOMIC_HPP

#include <string>
#include <vector>

#include "euler/rational.hpp"

namespace euler {

int euler_phi(int r);

// Coefficients of the r-th cyclotomic polynomial Phi_r, ascending degree,
// monic of degree phi(r).  Computed by exact division of x^r - 1 by the
// product of Phi_d over proper divisors d.
std::vector<Integer> cyclotomic_polynomial(int r);

// Exact element of Q(e_r), e_r = exp(2*pi*i/r), stored as the canonical
// residue mod Phi_r: phi(r) rational coefficients, degree < phi(r).
// Equality is field equality of the canonical forms.
class Cyclotomic {
public:
    explicit Cyclotomic(int r);
    Cyclotomic(int r, const Rational& value);

    static Cyclotomic zero(int r) { return Cyclotomic(r); }
    static Cyclotomic one(int r) { return Cyclotomic(r, Rational(1)); }

    int r() const { return r_; }
    bool is_zero() const;
    const std::vector<Rational>& coefficients() const& { return coeffs_; }
    std::vector<Rational> coefficients() && { return std::move(coeffs_); }

    Cyclotomic& operator+=(const Cyclotomic& other);
    Cyclotomic& operator-=(const Cyclotomic& other);
    Cyclotomic& operator*=(const Cyclotomic& other);
    Cyclotomic& operator+=(const Rational& c);
    Cyclotomic& operator-=(const Rational& c);
    Cyclotomic& operator*=(const Rational& c);

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Rational& c) { return a *= c; }
    friend Cyclotomic operator*(const Rational& c, Cyclotomic a) { return a *= c; }
    friend Cyclotomic operator-(Cyclotomic a);

    // Multiplicative inverse via the extended Euclid algorithm mod Phi_r.
    // Inverting zero is a domain error.
    Cyclotomic inverse() const;

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b)
    {
        return a.r_ == b.r_ && a.coeffs_ == b.coeffs_;
    }

private:
    int r_;
    std::vector<Rational> coeffs_;  // size phi(r)

    friend Cyclotomic root_power(int r, long j);
};

// Canonical representation of e_r^j (j taken mod r).
Cyclotomic root_power(int r, long j);

// Decimal rendering of the numerical value, guaranteed to at least the
// requested number of correct significant digits.  Display-only; never used
// in equality checks.
struct ComplexApprox {
    std::string real_text;
    std::string imag_text;
};

ComplexApprox approximate(const Cyclotomic& c, int digits);

// Double-precision rendering for quick numeric work (tests, plots).
struct ComplexDouble {
    double re;
    double im;
};

ComplexDouble to_complex_double(const Cyclotomic& c);

}  // namespace euler

#endif
