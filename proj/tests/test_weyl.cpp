#include "ponzeta/errors.hpp"
#include "ponzeta/fock.hpp"
#include "ponzeta/normal_form.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace ponzeta;

namespace {

// a_ell = a^ell as an expression.
ExprPtr a_pow(unsigned ell) {
    return OperatorExpr::power(OperatorExpr::generator(Gen::A), ell);
}
ExprPtr ad_pow(unsigned ell) {
    return OperatorExpr::power(OperatorExpr::generator(Gen::ADag), ell);
}

DiagonalPoly product_rising(unsigned ell) {
    DiagonalPoly p = DiagonalPoly::constant(1);
    for (unsigned i = 1; i <= ell; ++i)
        p = p * DiagonalPoly({Rational(i), 1});  // (n + i)
    return p;
}

DiagonalPoly product_falling(unsigned ell) {
    DiagonalPoly p = DiagonalPoly::constant(1);
    for (unsigned i = 0; i < ell; ++i)
        p = p * DiagonalPoly({Rational(-int(i)), 1});  // (n - i)
    return p;
}

}  // namespace

TEST_CASE("canonical relation a ad = ad a + 1") {
    auto nf = normal_order(parse("a*ad"));
    CHECK(nf == NormalForm::monomial(1, 1) + NormalForm::one());
    CHECK(nf.str() == "ad*a + 1");
}

TEST_CASE("basic commutators") {
    CHECK(commutator(parse("a"), parse("ad")) == NormalForm::one());
    CHECK(commutator(parse("a"), parse("a")).is_zero());
    CHECK(commutator(parse("ad"), parse("ad")).is_zero());
    CHECK(commutator(parse("n"), parse("ad")) == NormalForm::monomial(1, 0));
}

TEST_CASE("[a_2, a_2^dag] = 4 n + 2") {
    auto nf = normal_order(parse("[a^2, ad^2]"));
    CHECK(nf == NormalForm::monomial(1, 1, 4) + NormalForm::monomial(0, 0, 2));
    CHECK(diagonal_poly(nf) == DiagonalPoly({2, 4}));
    CHECK(nf.str() == "4*ad*a + 2");
    CHECK(diagonal_poly(nf).str() == "4*n + 2");
}

TEST_CASE("[a_3, a_3^dag] = 9 n^2 + 9 n + 6") {
    auto nf = normal_order(parse("[a^3, ad^3]"));
    CHECK(diagonal_poly(nf) == DiagonalPoly({6, 9, 9}));
}

TEST_CASE("number operator commutators for ell = 1..10") {
    auto n = OperatorExpr::generator(Gen::N);
    for (unsigned ell = 1; ell <= 10; ++ell) {
        CAPTURE(ell);
        // [n, a_ell^dag] = ell a_ell^dag
        CHECK(commutator(n, ad_pow(ell)) == NormalForm::monomial(ell, 0, Rational(ell)));
        // [n, a_ell] = -ell a_ell
        CHECK(commutator(n, a_pow(ell)) == NormalForm::monomial(0, ell, -Rational(ell)));
        // [a, (ad)^ell] = ell (ad)^{ell-1}
        CHECK(commutator(OperatorExpr::generator(Gen::A), ad_pow(ell)) ==
              NormalForm::monomial(ell - 1, 0, Rational(ell)));
    }
}

TEST_CASE("a_ell products are rising and falling factorials, ell = 1..10") {
    for (unsigned ell = 1; ell <= 10; ++ell) {
        CAPTURE(ell);
        auto create_first = normal_order(OperatorExpr::product({a_pow(ell), ad_pow(ell)}));
        auto annihilate_first = normal_order(OperatorExpr::product({ad_pow(ell), a_pow(ell)}));
        CHECK(diagonal_poly(create_first) == product_rising(ell));
        CHECK(diagonal_poly(create_first) == DiagonalPoly::rising_factorial(ell));
        CHECK(diagonal_poly(annihilate_first) == product_falling(ell));
        CHECK(diagonal_poly(annihilate_first) == DiagonalPoly::falling_factorial(ell));
    }
}

TEST_CASE("normal_order(a_2 a_2^dag) = (n+1)(n+2)") {
    auto nf = normal_order(parse("a^2*ad^2"));
    CHECK(diagonal_poly(nf) == DiagonalPoly({2, 3, 1}));
}

TEST_CASE("normal_order(ad*a) is the number operator") {
    auto nf = normal_order(parse("ad*a"));
    CHECK(nf == NormalForm::monomial(1, 1));
    CHECK(diagonal_poly(nf) == DiagonalPoly({0, 1}));
    CHECK(normal_order(parse("n")) == nf);
}

TEST_CASE("diagonal_poly rejects unbalanced forms") {
    CHECK_THROWS_AS(diagonal_poly(normal_order(parse("ad"))), NotDiagonal);
    CHECK_THROWS_AS(diagonal_poly(normal_order(parse("a*n"))), NotDiagonal);
}

TEST_CASE("already normal expressions survive untouched") {
    CHECK(normal_order(parse("a")).str() == "a");
    CHECK(normal_order(parse("ad^3*a^2")) == NormalForm::monomial(3, 2));
}

TEST_CASE("normal ordering is idempotent on random expressions") {
    oracles::ExprGen gen(7002);
    for (int i = 0; i < 100; ++i) {
        auto nf = normal_order(gen.expr(6));
        CHECK(normal_order(nf.to_expr()) == nf);
    }
}

TEST_CASE("normal ordering is a ring homomorphism") {
    oracles::ExprGen gen(7003);
    for (int i = 0; i < 100; ++i) {
        auto x = gen.expr(6);
        auto y = gen.expr(6);
        auto joint = normal_order(OperatorExpr::product({x, y}));
        CHECK(joint == normal_order(x) * normal_order(y));
    }
}

TEST_CASE("truncated matrix oracle agrees with the normal form") {
    oracles::ExprGen gen(7004);
    for (int i = 0; i < 40; ++i) {
        auto e = gen.expr(6);
        CAPTURE(e->str());
        auto direct = TruncatedMatrix::from_expr(e, 40);
        auto ordered = TruncatedMatrix::from_normal_form(normal_order(e), 40);
        CHECK(agree_on_valid_columns(direct, ordered));
    }
}

TEST_CASE("DiagonalPoly evaluation matches matrix elements") {
    auto nf = normal_order(parse("[a^3, ad^3]"));
    auto poly = diagonal_poly(nf);
    for (std::uint64_t n = 0; n <= 12; ++n) {
        SqrtAmp me = matrix_element(n, nf, n, 32);
        REQUIRE(me.is_rational());
        CHECK(me.rational_value() == poly.eval(Rational(n)));
    }
}
