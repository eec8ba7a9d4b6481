#include "ponzeta/errors.hpp"
#include "ponzeta/expr.hpp"

#include <cctype>
#include <string>

namespace ponzeta {

namespace {

// Hand-rolled recursive descent over the CLI expression grammar.
class Parser {
  public:
    explicit Parser(const std::string& text) : text_(text) {}

    ExprPtr run() {
        ExprPtr e = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return e;
    }

  private:
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool eat(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    Int parse_uint() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected an integer");
        Int v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            ++pos_;
        }
        return v;
    }

    Rational parse_rational(bool negative) {
        Int num = parse_uint();
        if (negative) num = -num;
        if (eat('/')) {
            Int den = parse_uint();
            if (den == 0) fail("zero denominator");
            return Rational(num, den);
        }
        return Rational(num);
    }

    ExprPtr parse_expr() {
        bool neg = eat('-');
        ExprPtr t = parse_term();
        if (neg) t = negate(t);
        std::vector<ExprPtr> terms{t};
        while (true) {
            if (eat('+')) {
                terms.push_back(parse_term());
            } else if (eat('-')) {
                terms.push_back(negate(parse_term()));
            } else {
                break;
            }
        }
        return terms.size() == 1 ? terms[0] : OperatorExpr::sum(std::move(terms));
    }

    static ExprPtr negate(const ExprPtr& e) {
        if (e->kind() == OperatorExpr::Kind::ScalarMul) {
            if (e->children().empty()) return OperatorExpr::scalar(-e->coeff());
            return OperatorExpr::scalar_mul(-e->coeff(), e->children()[0]);
        }
        return OperatorExpr::scalar_mul(-1, e);
    }

    // A leading bare-scalar factor folds into a ScalarMul so that parsing
    // the printer's output rebuilds the same tree.
    ExprPtr parse_term() {
        std::vector<ExprPtr> factors{parse_factor()};
        while (eat('*')) factors.push_back(parse_factor());
        if (factors.size() == 1) return factors[0];
        if (factors[0]->kind() == OperatorExpr::Kind::ScalarMul &&
            factors[0]->children().empty()) {
            Rational coeff = factors[0]->coeff();
            factors.erase(factors.begin());
            ExprPtr rest = factors.size() == 1 ? factors[0]
                                               : OperatorExpr::product(std::move(factors));
            return OperatorExpr::scalar_mul(std::move(coeff), std::move(rest));
        }
        return OperatorExpr::product(std::move(factors));
    }

    ExprPtr parse_factor() {
        ExprPtr atom = parse_atom();
        if (eat('^')) {
            skip_ws();
            if (peek() == '-') fail("exponent must be a non-negative integer");
            Int e = parse_uint();
            if (e > 1000000) fail("exponent too large");
            return OperatorExpr::power(atom, unsigned(e));
        }
        return atom;
    }

    ExprPtr parse_atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            ExprPtr e = parse_expr();
            expect(')');
            return e;
        }
        if (c == '[') {
            ++pos_;
            ExprPtr left = parse_expr();
            expect(',');
            ExprPtr right = parse_expr();
            expect(']');
            return OperatorExpr::commutator(left, right);
        }
        if (c == 'a') {
            ++pos_;
            if (pos_ < text_.size() && text_[pos_] == 'd') {
                ++pos_;
                return OperatorExpr::generator(Gen::ADag);
            }
            return OperatorExpr::generator(Gen::A);
        }
        if (c == 'n') {
            ++pos_;
            return OperatorExpr::generator(Gen::N);
        }
        if (c == '-') {
            ++pos_;
            return OperatorExpr::scalar(parse_rational(true));
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return OperatorExpr::scalar(parse_rational(false));
        fail("expected 'a', 'ad', 'n', a rational, '(' or '['");
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

}  // namespace

ExprPtr parse(const std::string& text) { return Parser(text).run(); }

}  // namespace ponzeta
