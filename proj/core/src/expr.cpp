#include "ponzeta/expr.hpp"

#include <sstream>

namespace ponzeta {

ExprPtr OperatorExpr::generator(Gen g) {
    auto e = new OperatorExpr(Kind::Generator);
    e->gen_ = g;
    return ExprPtr(e);
}

ExprPtr OperatorExpr::scalar(Rational r) {
    auto e = new OperatorExpr(Kind::ScalarMul);
    e->coeff_ = std::move(r);
    return ExprPtr(e);
}

ExprPtr OperatorExpr::scalar_mul(Rational r, ExprPtr child) {
    auto e = new OperatorExpr(Kind::ScalarMul);
    e->coeff_ = std::move(r);
    e->children_ = {std::move(child)};
    return ExprPtr(e);
}

ExprPtr OperatorExpr::sum(std::vector<ExprPtr> children) {
    auto e = new OperatorExpr(Kind::Sum);
    e->children_ = std::move(children);
    return ExprPtr(e);
}

ExprPtr OperatorExpr::product(std::vector<ExprPtr> children) {
    auto e = new OperatorExpr(Kind::Product);
    e->children_ = std::move(children);
    return ExprPtr(e);
}

ExprPtr OperatorExpr::power(ExprPtr child, unsigned exponent) {
    auto e = new OperatorExpr(Kind::Power);
    e->children_ = {std::move(child)};
    e->exponent_ = exponent;
    return ExprPtr(e);
}

ExprPtr OperatorExpr::commutator(ExprPtr left, ExprPtr right) {
    auto e = new OperatorExpr(Kind::Commutator);
    e->children_ = {std::move(left), std::move(right)};
    return ExprPtr(e);
}

// Precedence for printing: sum 0, product 1, power/atom 2.
namespace {
int precedence(const OperatorExpr& e) {
    switch (e.kind()) {
        case OperatorExpr::Kind::Sum: return 0;
        case OperatorExpr::Kind::ScalarMul:
            // A bare non-negative rational is an atom.
            return e.children().empty() && e.coeff() >= 0 ? 2 : 1;
        case OperatorExpr::Kind::Product: return 1;
        default: return 2;
    }
}

void print(const OperatorExpr& e, std::ostream& os, int parent_prec) {
    bool parens = precedence(e) < parent_prec;
    if (parens) os << "(";
    switch (e.kind()) {
        case OperatorExpr::Kind::Generator:
            switch (e.gen()) {
                case Gen::A: os << "a"; break;
                case Gen::ADag: os << "ad"; break;
                case Gen::N: os << "n"; break;
                case Gen::One: os << "1"; break;
            }
            break;
        case OperatorExpr::Kind::ScalarMul:
            if (e.children().empty()) {
                os << e.coeff();
            } else {
                os << e.coeff() << "*";
                print(*e.children()[0], os, 2);
            }
            break;
        case OperatorExpr::Kind::Sum: {
            bool first = true;
            for (const auto& c : e.children()) {
                if (!first) os << " + ";
                first = false;
                print(*c, os, 1);
            }
            break;
        }
        case OperatorExpr::Kind::Product: {
            bool first = true;
            for (const auto& c : e.children()) {
                if (!first) os << "*";
                first = false;
                print(*c, os, 2);
            }
            break;
        }
        case OperatorExpr::Kind::Power:
            print(*e.children()[0], os, 3);
            os << "^" << e.exponent();
            break;
        case OperatorExpr::Kind::Commutator:
            os << "[";
            print(*e.children()[0], os, 0);
            os << ", ";
            print(*e.children()[1], os, 0);
            os << "]";
            break;
    }
    if (parens) os << ")";
}
}  // namespace

std::string OperatorExpr::str() const {
    std::ostringstream os;
    print(*this, os, 0);
    return os.str();
}

}  // namespace ponzeta
