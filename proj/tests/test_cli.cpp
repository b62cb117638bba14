#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "euler/parser.hpp"
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

AlgebraElement random_element(Lcg& gen, int r)
{
    AlgebraElement out(r);
    int terms = 1 + gen.below(4);
    for (int t = 0; t < terms; ++t) {
        Rational c(gen.below(9) - 4, 1 + gen.below(3));
        out.add_term(random_word(gen, r, 5, 4), c);
    }
    return out;
}

}  // namespace

TEST_CASE("parsing words and expressions")
{
    AlgebraElement w = parse_word_expression("z[1,1] z[2,1]", 3);
    CHECK(w == AlgebraElement::from_word(make_word(3, {{1, 1}, {2, 1}})));

    CHECK(parse_word_expression("1", 2) == AlgebraElement::unit(2));
    CHECK(parse_word_expression("  3/2  ", 1) == AlgebraElement::unit(1) * Rational(3, 2));

    AlgebraElement combo = parse_word_expression("2 z[1,0] z[1,0] + z[2,0]", 1);
    Word a = make_word(1, {{1, 0}});
    CHECK(combo == star(a, a));

    AlgebraElement negative = parse_word_expression("-1 z[1,0] - 2 z[2,0]", 1);
    CHECK(negative.coefficient(a) == Rational(-1));
    CHECK(negative.coefficient(make_word(1, {{2, 0}})) == Rational(-2));

    // adjacent letters without separating spaces
    CHECK(parse_word_expression("z[1,0]z[2,0]", 1) ==
          AlgebraElement::from_word(make_word(1, {{1, 0}, {2, 0}})));

    // like terms accumulate and may cancel
    CHECK(parse_word_expression("z[1,0] - z[1,0]", 1).is_zero());
}

TEST_CASE("parse errors carry positions")
{
    CHECK_THROWS_AS(parse_word_expression("", 1), ParseError);
    CHECK_THROWS_AS(parse_word_expression("z[1", 1), ParseError);
    CHECK_THROWS_AS(parse_word_expression("z[1,0] +", 1), ParseError);
    CHECK_THROWS_AS(parse_word_expression("q", 1), ParseError);
    CHECK_THROWS_AS(parse_word_expression("1/0", 1), ParseError);

    try {
        parse_word_expression("z[1,0] z[oops]", 1);
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.position >= 8);
    }
}

TEST_CASE("letter subscripts are validated against r")
{
    CHECK_THROWS_AS(parse_word_expression("z[1,2]", 2), std::domain_error);
    CHECK_THROWS_AS(parse_word_expression("z[0,0]", 2), ParseError);
    try {
        parse_word_expression("z[1,5]", 3);
        CHECK(false);
    } catch (const std::domain_error& e) {
        CHECK(std::string(e.what()).find("z[1,5]") != std::string::npos);
    }
}

TEST_CASE("canonical printing")
{
    CHECK(to_string(AlgebraElement(2)) == "0");
    CHECK(to_string(AlgebraElement::unit(2)) == "1");
    CHECK(to_string(Word(3)) == "1");
    CHECK(to_string(make_word(2, {{1, 0}, {2, 1}})) == "z[1,0] z[2,1]");

    Word a = make_word(1, {{1, 0}});
    CHECK(to_string(star(a, a)) == "z[2,0] + 2 z[1,0] z[1,0]");

    AlgebraElement negative_lead = -AlgebraElement::from_word(a);
    CHECK(to_string(negative_lead) == "-1 z[1,0]");

    AlgebraElement tensor_src = AlgebraElement::from_word(make_word(1, {{1, 0}, {2, 0}}));
    CHECK(to_string(coproduct(tensor_src)) ==
          "1 (x) z[1,0] z[2,0] + z[1,0] (x) z[2,0] + z[1,0] z[2,0] (x) 1");
}

TEST_CASE("print-parse round trip")
{
    Lcg gen(2024);
    for (int t = 0; t < 40; ++t) {
        int r = 1 + gen.below(4);
        AlgebraElement x = random_element(gen, r);
        std::string text = to_string(x);
        AlgebraElement back = parse_word_expression(text, r);
        CHECK(back == x);
        // printing is canonical: a reprint is identical
        CHECK(to_string(back) == text);
    }
    CHECK(parse_word_expression("0", 3).is_zero());
}

TEST_CASE("generator is deterministic and seed-sensitive")
{
    Lcg a(42), b(42), c(43);
    bool all_equal = true, any_diff = false;
    for (int t = 0; t < 10; ++t) {
        uint32_t xa = a.next(), xb = b.next(), xc = c.next();
        all_equal = all_equal && xa == xb;
        any_diff = any_diff || xa != xc;
    }
    CHECK(all_equal);
    CHECK(any_diff);

    Lcg g1(7), g2(7);
    for (int t = 0; t < 10; ++t)
        CHECK(random_word(g1, 3, 6, 4) == random_word(g2, 3, 6, 4));
}

TEST_CASE("random words respect their bounds")
{
    Lcg gen(5);
    for (int t = 0; t < 200; ++t) {
        Word w = random_word(gen, 3, 6, 4);
        CHECK(w.length() >= 1);
        CHECK(w.length() <= 4);
        CHECK(w.degree() <= 6);
        CHECK(w.r() == 3);
    }
}

TEST_CASE("verification suites pass on a small range")
{
    VerifyOptions opt;
    opt.r = 1;
    opt.max_degree = 4;
    opt.max_length = 3;
    opt.max_n = 5;
    opt.seed = 7;
    for (const VerifyReport& report : run_verify("all", opt)) {
        INFO(report.suite);
        CHECK(report.ok());
        CHECK(report.cases > 0);
    }
    CHECK_THROWS_AS(run_verify("bogus", opt), std::domain_error);

    VerifyOptions opt2 = opt;
    opt2.r = 2;
    for (const VerifyReport& report : run_verify("duality", opt2))
        CHECK(report.ok());
}
