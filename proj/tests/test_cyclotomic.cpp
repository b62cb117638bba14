#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>

#include "euler/cyclotomic.hpp"
#include "euler/serialize.hpp"
#include "euler/verify.hpp"

using namespace euler;

namespace {

std::vector<Integer> poly(std::initializer_list<long> cs)
{
    std::vector<Integer> out;
    for (long c : cs)
        out.emplace_back(c);
    return out;
}

Cyclotomic random_element(Lcg& gen, int r)
{
    Cyclotomic acc(r);
    for (int k = 0; k < euler_phi(r); ++k) {
        int num = gen.below(9) - 4;
        int den = 1 + gen.below(4);
        acc += root_power(r, k) * Rational(num, den);
    }
    return acc;
}

}  // namespace

TEST_CASE("euler phi")
{
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(2) == 1);
    CHECK(euler_phi(6) == 2);
    CHECK(euler_phi(12) == 4);
    CHECK_THROWS_AS(euler_phi(0), std::domain_error);
}

TEST_CASE("cyclotomic polynomials")
{
    CHECK(cyclotomic_polynomial(1) == poly({-1, 1}));
    CHECK(cyclotomic_polynomial(2) == poly({1, 1}));
    CHECK(cyclotomic_polynomial(3) == poly({1, 1, 1}));
    CHECK(cyclotomic_polynomial(4) == poly({1, 0, 1}));
    CHECK(cyclotomic_polynomial(6) == poly({1, -1, 1}));
    CHECK(cyclotomic_polynomial(12) == poly({1, 0, -1, 0, 1}));

    for (int r = 1; r <= 12; ++r)
        CHECK(cyclotomic_polynomial(r).size() == static_cast<size_t>(euler_phi(r)) + 1);
}

TEST_CASE("root powers")
{
    CHECK(root_power(2, 1) == Cyclotomic(2, Rational(-1)));
    CHECK(root_power(4, 2) == Cyclotomic(4, Rational(-1)));
    CHECK(root_power(3, 1) + root_power(3, 2) == Cyclotomic(3, Rational(-1)));
    CHECK(root_power(5, 0) == Cyclotomic::one(5));
    CHECK(root_power(5, -2) == root_power(5, 3));

    for (int r = 1; r <= 8; ++r)
        for (int a = 0; a < r; ++a)
            for (int b = 0; b < r; ++b)
                CHECK(root_power(r, a) * root_power(r, b) == root_power(r, a + b));
}

TEST_CASE("multiplicative orders")
{
    for (int r = 2; r <= 8; ++r)
        for (int j = 1; j < r; ++j) {
            int expected = r / std::gcd(r, j);
            Cyclotomic power = Cyclotomic::one(r);
            for (int k = 1; k <= expected; ++k) {
                power *= root_power(r, j);
                if (k < expected)
                    CHECK_FALSE(power == Cyclotomic::one(r));
            }
            CHECK(power == Cyclotomic::one(r));
        }
}

TEST_CASE("root power sums")
{
    for (int r = 2; r <= 8; ++r) {
        Cyclotomic sum(r);
        for (int j = 0; j < r; ++j)
            sum += root_power(r, j);
        CHECK(sum.is_zero());
    }
    CHECK(root_power(1, 0) == Cyclotomic::one(1));
}

TEST_CASE("field axioms on sampled elements")
{
    Lcg gen(99);
    for (int r : {1, 2, 3, 4, 5, 6}) {
        for (int t = 0; t < 10; ++t) {
            Cyclotomic a = random_element(gen, r);
            Cyclotomic b = random_element(gen, r);
            Cyclotomic c = random_element(gen, r);
            CHECK((a + b) * c == a * c + b * c);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * b == b * a);
            if (!a.is_zero()) {
                CHECK(a * a.inverse() == Cyclotomic::one(r));
                CHECK(a.inverse().inverse() == a);
            }
        }
    }
    CHECK_THROWS_AS(Cyclotomic::zero(3).inverse(), std::domain_error);
}

TEST_CASE("canonical form is stable under identity operations")
{
    Lcg gen(7);
    for (int r : {2, 3, 4, 5})
        for (int t = 0; t < 5; ++t) {
            Cyclotomic a = random_element(gen, r);
            CHECK(a * Cyclotomic::one(r) == a);
            CHECK(a + Cyclotomic::zero(r) == a);
            // e^r folds to 1 exactly
            CHECK(root_power(r, r) == Cyclotomic::one(r));
        }
}

TEST_CASE("serialization")
{
    Cyclotomic mixed(3, Rational(3, 2));
    mixed += root_power(3, 1) * Rational(-1, 2);
    CHECK(to_string(mixed) == "(3/2) + (-1/2)*e^1");

    CHECK(to_string(Cyclotomic(1, Rational(11, 6))) == "11/6");
    CHECK(to_string(Cyclotomic::zero(4)) == "0");
    CHECK(to_string(root_power(4, 1)) == "(1)*e^1");
}

TEST_CASE("decimal approximation")
{
    ComplexApprox one = approximate(Cyclotomic::one(5), 12);
    CHECK(one.real_text == "1");
    CHECK(one.imag_text == "0");

    ComplexApprox i = approximate(root_power(4, 1), 12);
    CHECK(i.real_text == "0");
    CHECK(i.imag_text == "1");

    ComplexApprox third = approximate(root_power(3, 1), 10);
    CHECK(third.real_text == "-0.5");
    CHECK(third.imag_text.substr(0, 11) == "0.866025403");

    // against standard library trigonometry
    for (int r = 1; r <= 8; ++r)
        for (int j = 0; j < r; ++j) {
            ComplexDouble z = to_complex_double(root_power(r, j));
            double angle = 2.0 * 3.14159265358979323846 * j / r;
            CHECK(std::abs(z.re - std::cos(angle)) < 1e-12);
            CHECK(std::abs(z.im - std::sin(angle)) < 1e-12);
        }

    // plenty of digits still render correctly
    ComplexApprox wide = approximate(root_power(3, 1), 50);
    CHECK(wide.imag_text.substr(0, 30) == "0.8660254037844386467637231707");
}
