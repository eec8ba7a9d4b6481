#pragma once

#include "ponzeta/expr.hpp"
#include "ponzeta/numeric.hpp"

#include <map>
#include <string>
#include <utility>

namespace ponzeta {

// (j, k): a^dagger-degree and a-degree of a normal-ordered monomial
// (ad)^j a^k.
using Monomial = std::pair<unsigned, unsigned>;

// Exact linear combination of normal-ordered monomials; the canonical
// equality witness.  Two operators are equal iff their NormalForms are.
class NormalForm {
  public:
    NormalForm() = default;

    static NormalForm zero() { return {}; }
    static NormalForm one() { return monomial(0, 0); }
    static NormalForm monomial(unsigned j, unsigned k, Rational coeff = 1);

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_diagonal() const;  // every monomial balanced (j == k)
    unsigned degree() const;   // max j + k

    NormalForm& operator+=(const NormalForm& o);
    NormalForm& operator-=(const NormalForm& o);
    NormalForm& operator*=(const Rational& r);

    friend NormalForm operator+(NormalForm a, const NormalForm& b) { return a += b; }
    friend NormalForm operator-(NormalForm a, const NormalForm& b) { return a -= b; }
    // PBW product: contractions via a a^dag = a^dag a + 1.
    friend NormalForm operator*(const NormalForm& a, const NormalForm& b);
    friend bool operator==(const NormalForm& a, const NormalForm& b) {
        return a.terms_ == b.terms_;
    }

    ExprPtr to_expr() const;
    std::string str() const;

  private:
    std::map<Monomial, Rational> terms_;  // no zero coefficients stored
};

// Polynomial in n-hat with exact rational coefficients.
class DiagonalPoly {
  public:
    DiagonalPoly() = default;
    explicit DiagonalPoly(std::vector<Rational> coeffs);  // by ascending degree

    static DiagonalPoly constant(Rational c);
    // n(n-1)...(n-k+1) and (n+1)(n+2)...(n+k).
    static DiagonalPoly falling_factorial(unsigned k);
    static DiagonalPoly rising_factorial(unsigned k);

    const std::vector<Rational>& coeffs() const { return coeffs_; }
    unsigned degree() const { return coeffs_.empty() ? 0 : unsigned(coeffs_.size() - 1); }
    Rational eval(const Rational& n) const;

    DiagonalPoly& operator+=(const DiagonalPoly& o);
    friend DiagonalPoly operator+(DiagonalPoly a, const DiagonalPoly& b) { return a += b; }
    friend DiagonalPoly operator*(const DiagonalPoly& a, const DiagonalPoly& b);
    friend bool operator==(const DiagonalPoly& a, const DiagonalPoly& b) {
        return a.coeffs_ == b.coeffs_;
    }

    std::string str() const;

  private:
    void trim();
    std::vector<Rational> coeffs_;
};

// Rewrites to the unique normal-ordered form using only a ad = ad a + 1
// and linearity; n-hat expands to ad a.
NormalForm normal_order(const OperatorExpr& expr);
NormalForm normal_order(const ExprPtr& expr);

// normal_order(x y - y x).
NormalForm commutator(const ExprPtr& x, const ExprPtr& y);

// The unique q(n) with q(n)|n> = nf|n>; throws NotDiagonal if some
// monomial is unbalanced.  Uses (ad)^k a^k = n(n-1)...(n-k+1).
DiagonalPoly diagonal_poly(const NormalForm& nf);

}  // namespace ponzeta
