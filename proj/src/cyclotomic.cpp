#include "euler/cyclotomic.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace euler {

int euler_phi(int r)
{
    if (r < 1)
        throw std::domain_error("euler_phi: argument must be positive");
    int phi = r, n = r;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            phi -= phi / p;
            while (n % p == 0)
                n /= p;
        }
    }
    if (n > 1)
        phi -= phi / n;
    return phi;
}

namespace {

// Exact division of integer polynomials, divisor monic; remainder must
// vanish.  Coefficients ascending.
std::vector<Integer> poly_div_exact(std::vector<Integer> num, const std::vector<Integer>& den)
{
    const size_t dn = num.size() - 1, dd = den.size() - 1;
    std::vector<Integer> quot(dn - dd + 1, Integer(0));
    for (size_t k = dn + 1; k-- > dd;) {
        Integer q = num[k];
        if (q == 0)
            continue;
        quot[k - dd] = q;
        for (size_t t = 0; t <= dd; ++t)
            num[k - dd + t] -= q * den[t];
    }
    for (const Integer& c : num)
        if (c != 0)
            throw std::logic_error("poly_div_exact: nonzero remainder");
    return quot;
}

std::vector<Integer> compute_cyclotomic(int r)
{
    if (r == 1)
        return {Integer(-1), Integer(1)};  // x - 1
    std::vector<Integer> num(static_cast<size_t>(r) + 1, Integer(0));
    num[0] = -1;
    num[static_cast<size_t>(r)] = 1;  // x^r - 1
    for (int d = 1; d < r; ++d)
        if (r % d == 0)
            num = poly_div_exact(std::move(num), compute_cyclotomic(d));
    return num;
}

const std::vector<Integer>& cached_cyclotomic(int r)
{
    static std::mutex mutex;
    static std::map<int, std::vector<Integer>> cache;  // node-stable
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(r);
    if (it != cache.end())
        return it->second;
    return cache.emplace(r, compute_cyclotomic(r)).first->second;
}

// Reduce a rational polynomial (ascending coefficients) mod Phi_r in place
// and resize to phi(r).
void reduce_mod_phi(std::vector<Rational>& poly, int r)
{
    const std::vector<Integer>& phi = cached_cyclotomic(r);
    const size_t deg = phi.size() - 1;
    for (size_t k = poly.size(); k-- > deg;) {
        Rational q = poly[k];
        if (q == 0)
            continue;
        for (size_t t = 0; t <= deg; ++t)
            poly[k - deg + t] -= q * Rational(phi[t]);
    }
    poly.resize(deg, Rational(0));
}

std::vector<Rational> trimmed(const std::vector<Rational>& p)
{
    std::vector<Rational> out = p;
    while (!out.empty() && out.back() == 0)
        out.pop_back();
    return out;
}

}  // namespace

std::vector<Integer> cyclotomic_polynomial(int r)
{
    if (r < 1)
        throw std::domain_error("cyclotomic_polynomial: r must be positive");
    return cached_cyclotomic(r);
}

Cyclotomic::Cyclotomic(int r) : r_(r)
{
    if (r_ < 1)
        throw std::domain_error("cyclotomic: r must be positive");
    coeffs_.assign(static_cast<size_t>(euler_phi(r_)), Rational(0));
}

Cyclotomic::Cyclotomic(int r, const Rational& value) : Cyclotomic(r)
{
    coeffs_[0] = value;
}

bool Cyclotomic::is_zero() const
{
    for (const Rational& c : coeffs_)
        if (c != 0)
            return false;
    return true;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& other)
{
    if (other.r_ != r_)
        throw std::domain_error("cyclotomic: mismatched field index");
    for (size_t t = 0; t < coeffs_.size(); ++t)
        coeffs_[t] += other.coeffs_[t];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& other)
{
    if (other.r_ != r_)
        throw std::domain_error("cyclotomic: mismatched field index");
    for (size_t t = 0; t < coeffs_.size(); ++t)
        coeffs_[t] -= other.coeffs_[t];
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& other)
{
    if (other.r_ != r_)
        throw std::domain_error("cyclotomic: mismatched field index");
    if (is_zero() || other.is_zero()) {
        coeffs_.assign(coeffs_.size(), Rational(0));
        return *this;
    }
    std::vector<Rational> prod(2 * coeffs_.size() - 1, Rational(0));
    for (size_t s = 0; s < coeffs_.size(); ++s) {
        if (coeffs_[s] == 0)
            continue;
        for (size_t t = 0; t < other.coeffs_.size(); ++t)
            if (other.coeffs_[t] != 0)
                prod[s + t] += coeffs_[s] * other.coeffs_[t];
    }
    reduce_mod_phi(prod, r_);
    coeffs_ = std::move(prod);
    return *this;
}

Cyclotomic& Cyclotomic::operator+=(const Rational& c)
{
    coeffs_[0] += c;
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Rational& c)
{
    coeffs_[0] -= c;
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& c)
{
    for (Rational& x : coeffs_)
        x *= c;
    return *this;
}

Cyclotomic operator-(Cyclotomic a)
{
    return a *= Rational(-1);
}

Cyclotomic Cyclotomic::inverse() const
{
    if (is_zero())
        throw std::domain_error("cyclotomic: inverse of zero");
    // extended Euclid on (this, Phi_r) over Q[x]; Phi_r is irreducible, so
    // the gcd is a nonzero constant
    std::vector<Rational> a = trimmed(coeffs_);
    std::vector<Rational> b;
    for (const Integer& c : cached_cyclotomic(r_))
        b.emplace_back(c);
    // invariant: s_t * this == r_t (mod Phi_r)
    std::vector<Rational> r0 = b, r1 = a;
    std::vector<Rational> s0{}, s1{Rational(1)};
    while (!r1.empty()) {
        // quotient of r0 by r1
        std::vector<Rational> q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0,
                                Rational(0));
        std::vector<Rational> rem = r0;
        while (rem.size() >= r1.size() && !rem.empty()) {
            Rational qc = rem.back() / r1.back();
            size_t shift = rem.size() - r1.size();
            q[shift] += qc;
            for (size_t t = 0; t < r1.size(); ++t)
                rem[shift + t] -= qc * r1[t];
            while (!rem.empty() && rem.back() == 0)
                rem.pop_back();
        }
        // s_next = s0 - q * s1
        std::vector<Rational> qs(q.size() + (s1.empty() ? 0 : s1.size() - 1) + 1, Rational(0));
        for (size_t s = 0; s < q.size(); ++s)
            if (q[s] != 0)
                for (size_t t = 0; t < s1.size(); ++t)
                    qs[s + t] += q[s] * s1[t];
        std::vector<Rational> s_next = s0;
        if (s_next.size() < qs.size())
            s_next.resize(qs.size(), Rational(0));
        for (size_t t = 0; t < qs.size(); ++t)
            s_next[t] -= qs[t];
        while (!s_next.empty() && s_next.back() == 0)
            s_next.pop_back();
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s_next);
    }
    // r0 = gcd (constant), s0 * this = r0 (mod Phi)
    if (r0.size() != 1)
        throw std::logic_error("cyclotomic: gcd with Phi_r not constant");
    Rational scale = Rational(1) / r0[0];
    std::vector<Rational> inv = s0;
    for (Rational& c : inv)
        c *= scale;
    inv.resize(coeffs_.size(), Rational(0));
    reduce_mod_phi(inv, r_);
    Cyclotomic out(r_);
    out.coeffs_ = std::move(inv);
    return out;
}

Cyclotomic root_power(int r, long j)
{
    if (r < 1)
        throw std::domain_error("root_power: r must be positive");
    long e = ((j % r) + r) % r;
    Cyclotomic out(r);
    if (e < euler_phi(r)) {
        out.coeffs_[static_cast<size_t>(e)] = 1;
        return out;
    }
    std::vector<Rational> poly(static_cast<size_t>(e) + 1, Rational(0));
    poly[static_cast<size_t>(e)] = 1;
    reduce_mod_phi(poly, r);
    out.coeffs_ = std::move(poly);
    return out;
}

namespace {

using BigFloat = boost::multiprecision::mpfr_float;

BigFloat to_bigfloat(const Rational& q)
{
    return BigFloat(numerator(q).str()) / BigFloat(denominator(q).str());
}

std::string render(const BigFloat& x, const BigFloat& noise, int digits)
{
    if (abs(x) <= noise)
        return "0";
    return x.str(digits);
}

}  // namespace

ComplexApprox approximate(const Cyclotomic& c, int digits)
{
    if (digits < 1)
        digits = 1;
    // work with a generous guard so the printed digits are always correct
    unsigned old_precision = BigFloat::default_precision();
    BigFloat::default_precision(static_cast<unsigned>(digits) + 30);
    ComplexApprox out;
    {
        BigFloat tau = 2 * boost::math::constants::pi<BigFloat>();
        BigFloat re = 0, im = 0, scale = 1;
        const int r = c.r();
        for (size_t k = 0; k < c.coefficients().size(); ++k) {
            const Rational& q = c.coefficients()[k];
            if (q == 0)
                continue;
            BigFloat coeff = to_bigfloat(q);
            BigFloat angle = tau * static_cast<int>(k) / r;
            re += coeff * cos(angle);
            im += coeff * sin(angle);
            scale += abs(coeff);
        }
        // anything below the guard band is an exact zero blurred by rounding
        BigFloat noise = scale * pow(BigFloat(10), -(digits + 15));
        out.real_text = render(re, noise, digits);
        out.imag_text = render(im, noise, digits);
    }
    BigFloat::default_precision(old_precision);
    return out;
}

ComplexDouble to_complex_double(const Cyclotomic& c)
{
    double re = 0, im = 0;
    const double tau = 2.0 * 3.14159265358979323846;
    for (size_t k = 0; k < c.coefficients().size(); ++k) {
        const Rational& q = c.coefficients()[k];
        if (q == 0)
            continue;
        double coeff = static_cast<double>(numerator(q)) / static_cast<double>(denominator(q));
        double angle = tau * static_cast<double>(k) / c.r();
        re += coeff * std::cos(angle);
        im += coeff * std::sin(angle);
    }
    return {re, im};
}

}  // namespace euler
