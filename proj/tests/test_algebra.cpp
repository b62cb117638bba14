#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <tuple>

#include "euler/algebra.hpp"
#include "euler/serialize.hpp"
#include "euler/verify.hpp"

using namespace euler;

namespace {

Word make_word(int r, std::initializer_list<std::pair<int, int>> ij)
{
    std::vector<Letter> letters;
    for (auto [i, j] : ij)
        letters.emplace_back(i, j, r);
    return Word(r, std::move(letters));
}

std::vector<Word> small_words(int r, int max_degree, int max_length)
{
    std::vector<Word> out;
    out.push_back(Word(r));
    for (int d = 1; d <= max_degree; ++d)
        for (const Word& w : enumerate_words(d, r))
            if (w.length() <= max_length)
                out.push_back(w);
    return out;
}

}  // namespace

TEST_CASE("element term bookkeeping")
{
    AlgebraElement x(2);
    CHECK(x.is_zero());
    Word w = make_word(2, {{1, 1}});
    x.add_term(w, Rational(2));
    x.add_term(w, Rational(-2));
    CHECK(x.is_zero());

    x.add_term(w, Rational(1, 3));
    CHECK(x.coefficient(w) == Rational(1, 3));
    CHECK_THROWS_AS(x.add_term(Word(3), Rational(1)), std::domain_error);

    AlgebraElement y(3);
    CHECK_THROWS_AS(x += y, std::domain_error);
}

TEST_CASE("worked quasi-shuffle product at r=3")
{
    Word left = make_word(3, {{1, 1}});
    Word right = make_word(3, {{1, 2}, {2, 1}});

    AlgebraElement expected(3);
    expected.add_term(make_word(3, {{1, 1}, {1, 2}, {2, 1}}), Rational(1));
    expected.add_term(make_word(3, {{1, 2}, {1, 1}, {2, 1}}), Rational(1));
    expected.add_term(make_word(3, {{1, 2}, {2, 1}, {1, 1}}), Rational(1));
    expected.add_term(make_word(3, {{1, 2}, {3, 2}}), Rational(1));
    expected.add_term(make_word(3, {{2, 0}, {2, 1}}), Rational(1));

    CHECK(star(left, right) == expected);
}

TEST_CASE("product unit and base cases")
{
    Word w = make_word(2, {{1, 0}, {2, 1}});
    CHECK(star(Word(2), w) == AlgebraElement::from_word(w));
    CHECK(star(w, Word(2)) == AlgebraElement::from_word(w));

    Word a = make_word(1, {{1, 0}});
    AlgebraElement expected(1);
    expected.add_term(make_word(1, {{1, 0}, {1, 0}}), Rational(2));
    expected.add_term(make_word(1, {{2, 0}}), Rational(1));
    CHECK(star(a, a) == expected);

    CHECK_THROWS_AS(star(Word(1), Word(2)), std::domain_error);
}

TEST_CASE("product laws")
{
    Lcg gen(11);
    for (int t = 0; t < 25; ++t) {
        int r = 1 + gen.below(3);
        Word u = random_word(gen, r, 6, 4);
        Word v = random_word(gen, r, 6, 4);
        Word x = random_word(gen, r, 6, 4);

        CHECK(star(u, v) == star(v, u));
        CHECK(star(star(u, v), AlgebraElement::from_word(x)) ==
              star(AlgebraElement::from_word(u), star(v, x)));

        for (const auto& [w, c] : star(u, v).terms())
            CHECK(w.degree() == u.degree() + v.degree());
    }
}

TEST_CASE("coproduct")
{
    CHECK(coproduct(Word(2)).terms().size() == 1);
    TensorElement unit_expected(2);
    unit_expected.add_term(Word(2), Word(2), Rational(1));
    CHECK(coproduct(Word(2)) == unit_expected);

    Word a = make_word(2, {{1, 1}});
    TensorElement letter_expected(2);
    letter_expected.add_term(a, Word(2), Rational(1));
    letter_expected.add_term(Word(2), a, Rational(1));
    CHECK(coproduct(a) == letter_expected);

    Word ab = make_word(2, {{1, 1}, {2, 0}});
    Word b = make_word(2, {{2, 0}});
    TensorElement pair_expected(2);
    pair_expected.add_term(ab, Word(2), Rational(1));
    pair_expected.add_term(a, b, Rational(1));
    pair_expected.add_term(Word(2), ab, Rational(1));
    CHECK(coproduct(ab) == pair_expected);
}

TEST_CASE("counit")
{
    CHECK(counit(AlgebraElement::unit(3)) == 1);
    CHECK(counit(AlgebraElement::from_word(make_word(3, {{1, 0}}))) == 0);

    AlgebraElement mix = AlgebraElement::unit(1) * Rational(3);
    mix.add_term(make_word(1, {{1, 0}}), Rational(2));
    CHECK(counit(mix) == 3);
}

TEST_CASE("antipode on small words")
{
    CHECK(antipode(Word(2)) == AlgebraElement::unit(2));

    Word a = make_word(2, {{1, 1}});
    CHECK(antipode(a) == -AlgebraElement::from_word(a));

    Word ab = make_word(1, {{1, 0}, {2, 0}});
    AlgebraElement expected(1);
    expected.add_term(make_word(1, {{2, 0}, {1, 0}}), Rational(1));
    expected.add_term(make_word(1, {{3, 0}}), Rational(1));
    CHECK(antipode(ab) == expected);
    CHECK(antipode_via_products(ab) == expected);
    CHECK(antipode_via_compositions(ab) == expected);

    // length three: four coarsenings of the reversal, all weighted -1
    Word abc = make_word(2, {{1, 0}, {1, 1}, {2, 1}});
    AlgebraElement s = antipode_via_compositions(abc);
    Rational total(0);
    for (const auto& [w, c] : s.terms())
        total += c;
    CHECK(total == Rational(-4));
    CHECK(s == antipode_via_products(abc));
}

TEST_CASE("antipode formulas agree")
{
    for (int r : {1, 2, 3})
        for (const Word& w : small_words(r, 5, 4))
            CHECK(antipode_via_products(w) == antipode_via_compositions(w));
}

TEST_CASE("antipode involution and homomorphism")
{
    Lcg gen(5);
    for (int t = 0; t < 20; ++t) {
        int r = 1 + gen.below(3);
        Word u = random_word(gen, r, 5, 4);
        Word v = random_word(gen, r, 5, 4);
        CHECK(antipode(antipode(u)) == AlgebraElement::from_word(u));
        CHECK(antipode(star(u, v)) == star(antipode(u), antipode(v)));
    }
}

TEST_CASE("hopf antipode axiom on short words")
{
    for (int r : {1, 2})
        for (const Word& w : small_words(r, 4, 3)) {
            AlgebraElement left_convolved(r), right_convolved(r);
            for (const auto& [key, c] : coproduct(w).terms()) {
                AlgebraElement l = star(antipode(key.first),
                                        AlgebraElement::from_word(key.second));
                l *= c;
                left_convolved += l;
                AlgebraElement rr = star(AlgebraElement::from_word(key.first),
                                         antipode(key.second));
                rr *= c;
                right_convolved += rr;
            }
            AlgebraElement target(r);
            if (w.empty())
                target = AlgebraElement::unit(r);
            CHECK(left_convolved == target);
            CHECK(right_convolved == target);
        }
}

TEST_CASE("overline")
{
    Word a = make_word(2, {{1, 1}});
    CHECK(overline(a) == AlgebraElement::from_word(a));
    CHECK(overline(Word(2)) == AlgebraElement::unit(2));

    Word ab = make_word(3, {{1, 1}, {2, 0}});
    AlgebraElement expected(3);
    expected.add_term(ab, Rational(1));
    expected.add_term(make_word(3, {{3, 1}}), Rational(1));
    CHECK(overline(ab) == expected);

    Word aa = make_word(1, {{1, 0}, {1, 0}});
    AlgebraElement expected_aa(1);
    expected_aa.add_term(aa, Rational(1));
    expected_aa.add_term(make_word(1, {{2, 0}}), Rational(1));
    CHECK(overline(aa) == expected_aa);

    // overline(w) = (-1)^{l(w)} S(R(w))
    for (int r : {1, 2, 3})
        for (const Word& w : small_words(r, 5, 4)) {
            AlgebraElement rhs = antipode(reverse(w));
            if (w.length() % 2 != 0)
                rhs *= Rational(-1);
            CHECK(overline(w) == rhs);
        }
}

TEST_CASE("overline-basis product")
{
    Word a = make_word(1, {{1, 0}});
    CHECK(overline_star(Word(1), a) == AlgebraElement::from_word(a));

    AlgebraElement expected(1);
    expected.add_term(make_word(1, {{1, 0}, {1, 0}}), Rational(2));
    expected.add_term(make_word(1, {{2, 0}}), Rational(-1));
    CHECK(overline_star(a, a) == expected);

    Word x = make_word(2, {{1, 0}});
    Word y = make_word(2, {{1, 1}});
    AlgebraElement expected_xy(2);
    expected_xy.add_term(make_word(2, {{1, 0}, {1, 1}}), Rational(1));
    expected_xy.add_term(make_word(2, {{1, 1}, {1, 0}}), Rational(1));
    expected_xy.add_term(make_word(2, {{2, 1}}), Rational(-1));
    CHECK(overline_star(x, y) == expected_xy);
}

TEST_CASE("overline-basis product expands consistently")
{
    Lcg gen(23);
    for (int t = 0; t < 20; ++t) {
        int r = 1 + gen.below(3);
        Word u = random_word(gen, r, 5, 4);
        Word v = random_word(gen, r, 5, 4);
        AlgebraElement expanded(r);
        for (const auto& [w, c] : overline_star(u, v).terms()) {
            AlgebraElement part = overline(w);
            part *= c;
            expanded += part;
        }
        CHECK(expanded == star(overline(u), overline(v)));
    }
}

TEST_CASE("overline inversion")
{
    for (int r : {1, 2})
        for (const Word& w : small_words(r, 5, 4)) {
            if (w.empty())
                continue;
            AlgebraElement acc(r);
            const Word rw = reverse(w);
            for (const Composition& J : enumerate_compositions(w.length())) {
                AlgebraElement product = AlgebraElement::unit(r);
                int pos = 0;
                for (int part : J.parts()) {
                    product = star(product, overline(rw.subword(pos, part)));
                    pos += part;
                }
                if ((w.length() - J.length()) % 2 != 0)
                    product *= Rational(-1);
                acc += product;
            }
            CHECK(acc == AlgebraElement::from_word(w));
        }
}

TEST_CASE("reversal is a product automorphism")
{
    AlgebraElement unit = AlgebraElement::unit(2);
    CHECK(reverse_linear(unit) == unit);

    // on the worked product
    Word left = make_word(3, {{1, 1}});
    Word right = make_word(3, {{1, 2}, {2, 1}});
    CHECK(reverse_linear(star(left, right)) == star(reverse(left), reverse(right)));

    Lcg gen(31);
    for (int t = 0; t < 20; ++t) {
        int r = 1 + gen.below(3);
        Word u = random_word(gen, r, 6, 4);
        Word v = random_word(gen, r, 6, 4);
        CHECK(reverse_linear(star(u, v)) == star(reverse(u), reverse(v)));
        CHECK(reverse_linear(reverse_linear(star(u, v))) == star(u, v));
    }
}

TEST_CASE("reversal is a coalgebra anti-morphism")
{
    // Delta(R(w)) equals the flip of (R x R) Delta(w); the unflipped form
    // fails already on two distinct letters
    auto flip = [](const TensorElement& x) {
        TensorElement out(x.r());
        for (const auto& [key, c] : x.terms())
            out.add_term(key.second, key.first, c);
        return out;
    };
    auto reverse_both = [](const TensorElement& x) {
        TensorElement out(x.r());
        for (const auto& [key, c] : x.terms())
            out.add_term(reverse(key.first), reverse(key.second), c);
        return out;
    };

    for (int r : {1, 2})
        for (const Word& w : small_words(r, 5, 4))
            CHECK(coproduct(reverse(w)) == flip(reverse_both(coproduct(w))));

    Word ab = make_word(1, {{1, 0}, {2, 0}});
    CHECK_FALSE(coproduct(reverse(ab)) == reverse_both(coproduct(ab)));
}

TEST_CASE("coassociativity and counit laws")
{
    using Triple = std::map<std::tuple<Word, Word, Word>, Rational>;
    for (int r : {1, 2})
        for (const Word& w : small_words(r, 5, 4)) {
            Triple left, right;
            for (const auto& [key, c] : coproduct(w).terms()) {
                for (const auto& [inner, d] : coproduct(key.first).terms())
                    left[{inner.first, inner.second, key.second}] += c * d;
                for (const auto& [inner, d] : coproduct(key.second).terms())
                    right[{key.first, inner.first, inner.second}] += c * d;
            }
            CHECK(left == right);

            AlgebraElement from_left(r), from_right(r);
            for (const auto& [key, c] : coproduct(w).terms()) {
                if (key.first.empty())
                    from_left.add_term(key.second, c);
                if (key.second.empty())
                    from_right.add_term(key.first, c);
            }
            CHECK(from_left == AlgebraElement::from_word(w));
            CHECK(from_right == AlgebraElement::from_word(w));
        }
}
