#include "ponzeta/errors.hpp"
#include "ponzeta/expr.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace ponzeta;

TEST_CASE("single generators parse to leaves") {
    auto e = parse("a");
    CHECK(e->kind() == OperatorExpr::Kind::Generator);
    CHECK(e->gen() == Gen::A);
    CHECK(parse("ad")->gen() == Gen::ADag);
    CHECK(parse("n")->gen() == Gen::N);
}

TEST_CASE("commutator brackets parse to a single node") {
    auto e = parse("[a, ad]");
    REQUIRE(e->kind() == OperatorExpr::Kind::Commutator);
    CHECK(e->children()[0]->gen() == Gen::A);
    CHECK(e->children()[1]->gen() == Gen::ADag);
}

TEST_CASE("products of powers") {
    auto e = parse("ad^2 * a^2");
    REQUIRE(e->kind() == OperatorExpr::Kind::Product);
    REQUIRE(e->children().size() == 2);
    CHECK(e->children()[0]->kind() == OperatorExpr::Kind::Power);
    CHECK(e->children()[0]->exponent() == 2);
    CHECK(e->children()[1]->exponent() == 2);
}

TEST_CASE("rational scalars") {
    auto e = parse("3/4");
    CHECK(e->kind() == OperatorExpr::Kind::ScalarMul);
    CHECK(e->coeff() == Rational(3, 4));
    CHECK(parse("-2")->coeff() == Rational(-2));
}

TEST_CASE("sums, differences and leading minus") {
    CHECK_NOTHROW(parse("a + ad - n"));
    CHECK_NOTHROW(parse("-a + 2*n"));
    CHECK_NOTHROW(parse("(a + ad)^3"));
    CHECK_NOTHROW(parse("[n, a^2] - 1/2*ad"));
}

TEST_CASE("printer emits the grammar the parser accepts") {
    for (const char* text : {"a", "ad^2*a^2", "[a, ad]", "3/4*n + a", "(a + ad)^2",
                             "[n, a^3]", "-2*a"}) {
        auto once = parse(text)->str();
        auto twice = parse(once)->str();
        CHECK(once == twice);
    }
}

TEST_CASE("round trip on random expressions") {
    oracles::ExprGen gen(7001);
    for (int i = 0; i < 200; ++i) {
        auto e = gen.expr(6);
        auto printed = e->str();
        CAPTURE(printed);
        auto reparsed = parse(printed);
        CHECK(printed == reparsed->str());
    }
}

TEST_CASE("syntax errors carry a position") {
    CHECK_THROWS_AS(parse(""), ParseError);
    CHECK_THROWS_AS(parse("a +"), ParseError);
    CHECK_THROWS_AS(parse("(a"), ParseError);
    CHECK_THROWS_AS(parse("[a, ad"), ParseError);
    CHECK_THROWS_AS(parse("b"), ParseError);
    CHECK_THROWS_AS(parse("a^"), ParseError);
    CHECK_THROWS_AS(parse("a^-1"), ParseError);
    CHECK_THROWS_AS(parse("a a"), ParseError);
    try {
        parse("a + %");
    } catch (const ParseError& e) {
        CHECK(e.position == 4);
    }
}

TEST_CASE("exponent must be a non-negative integer literal") {
    CHECK_THROWS_AS(parse("a^(2)"), ParseError);
    CHECK_THROWS_AS(parse("a^1/2"), ParseError);  // grammar: '^' uint
    auto ok = parse("a^0");
    CHECK(ok->kind() == OperatorExpr::Kind::Power);
    CHECK(ok->exponent() == 0);
}
