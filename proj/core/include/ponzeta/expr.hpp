#pragma once

#include "ponzeta/numeric.hpp"

#include <memory>
#include <string>
#include <vector>

namespace ponzeta {

enum class Gen { A, ADag, N, One };

// Parsed operator expression over a, a^dagger, n-hat and rational scalars.
// Immutable after construction; shared subtrees are fine.
class OperatorExpr;
using ExprPtr = std::shared_ptr<const OperatorExpr>;

class OperatorExpr {
  public:
    enum class Kind { Generator, ScalarMul, Sum, Product, Power, Commutator };

    static ExprPtr generator(Gen g);
    static ExprPtr scalar(Rational r);  // r * 1
    static ExprPtr scalar_mul(Rational r, ExprPtr child);
    static ExprPtr sum(std::vector<ExprPtr> children);
    static ExprPtr product(std::vector<ExprPtr> children);
    static ExprPtr power(ExprPtr child, unsigned exponent);
    static ExprPtr commutator(ExprPtr left, ExprPtr right);

    Kind kind() const { return kind_; }
    Gen gen() const { return gen_; }
    const Rational& coeff() const { return coeff_; }
    unsigned exponent() const { return exponent_; }
    const std::vector<ExprPtr>& children() const { return children_; }

    // Emits the same grammar the parser accepts.
    std::string str() const;

  private:
    OperatorExpr(Kind k) : kind_(k) {}

    Kind kind_;
    Gen gen_ = Gen::One;
    Rational coeff_ = 1;
    unsigned exponent_ = 0;
    std::vector<ExprPtr> children_;
};

// expr := ('-')? term (('+'|'-') term)* ; term := factor ('*' factor)* ;
// factor := atom ('^' uint)? ;
// atom := 'a' | 'ad' | 'n' | rational | '(' expr ')' | '[' expr ',' expr ']'
ExprPtr parse(const std::string& text);

}  // namespace ponzeta
