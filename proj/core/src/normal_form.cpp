#include "ponzeta/normal_form.hpp"

#include "ponzeta/errors.hpp"

#include <algorithm>
#include <sstream>

namespace ponzeta {

NormalForm NormalForm::monomial(unsigned j, unsigned k, Rational coeff) {
    NormalForm nf;
    if (coeff != 0) nf.terms_[{j, k}] = std::move(coeff);
    return nf;
}

bool NormalForm::is_diagonal() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.first.first == t.first.second; });
}

unsigned NormalForm::degree() const {
    unsigned d = 0;
    for (const auto& [mono, _] : terms_) d = std::max(d, mono.first + mono.second);
    return d;
}

NormalForm& NormalForm::operator+=(const NormalForm& o) {
    for (const auto& [mono, coeff] : o.terms_) {
        auto it = terms_.find(mono);
        if (it == terms_.end()) {
            terms_.emplace(mono, coeff);
        } else {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

NormalForm& NormalForm::operator-=(const NormalForm& o) {
    for (const auto& [mono, coeff] : o.terms_) {
        auto it = terms_.find(mono);
        if (it == terms_.end()) {
            terms_.emplace(mono, -coeff);
        } else {
            it->second -= coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

NormalForm& NormalForm::operator*=(const Rational& r) {
    if (r == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [mono, coeff] : terms_) coeff *= r;
    return *this;
}

NormalForm operator*(const NormalForm& a, const NormalForm& b) {
    // (ad)^j1 a^k1 (ad)^j2 a^k2
    //   = sum_i i! C(k1,i) C(j2,i) (ad)^{j1+j2-i} a^{k1+k2-i},
    // repeated contraction of a against ad via a ad = ad a + 1.
    NormalForm out;
    for (const auto& [m1, c1] : a.terms()) {
        for (const auto& [m2, c2] : b.terms()) {
            auto [j1, k1] = m1;
            auto [j2, k2] = m2;
            unsigned top = std::min(k1, j2);
            for (unsigned i = 0; i <= top; ++i) {
                Rational c = c1 * c2 * Rational(factorial(i) * binomial(k1, i) * binomial(j2, i));
                out += NormalForm::monomial(j1 + j2 - i, k1 + k2 - i, std::move(c));
            }
        }
    }
    return out;
}

ExprPtr NormalForm::to_expr() const {
    if (terms_.empty()) return OperatorExpr::scalar(0);
    std::vector<ExprPtr> terms;
    for (const auto& [mono, coeff] : terms_) {
        auto [j, k] = mono;
        std::vector<ExprPtr> factors;
        if (j == 1) factors.push_back(OperatorExpr::generator(Gen::ADag));
        if (j > 1) factors.push_back(OperatorExpr::power(OperatorExpr::generator(Gen::ADag), j));
        if (k == 1) factors.push_back(OperatorExpr::generator(Gen::A));
        if (k > 1) factors.push_back(OperatorExpr::power(OperatorExpr::generator(Gen::A), k));
        ExprPtr body;
        if (factors.empty())
            body = OperatorExpr::scalar(coeff);
        else if (factors.size() == 1)
            body = coeff == 1 ? factors[0] : OperatorExpr::scalar_mul(coeff, factors[0]);
        else {
            ExprPtr prod = OperatorExpr::product(std::move(factors));
            body = coeff == 1 ? prod : OperatorExpr::scalar_mul(coeff, prod);
        }
        terms.push_back(std::move(body));
    }
    return terms.size() == 1 ? terms[0] : OperatorExpr::sum(std::move(terms));
}

std::string NormalForm::str() const {
    if (terms_.empty()) return "0";
    // Highest total degree first, then a^dagger-heavy first.
    std::vector<std::pair<Monomial, Rational>> sorted(terms_.begin(), terms_.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) {
        unsigned dx = x.first.first + x.first.second, dy = y.first.first + y.first.second;
        if (dx != dy) return dx > dy;
        return x.first.first > y.first.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [mono, coeff] : sorted) {
        auto [j, k] = mono;
        Rational c = coeff;
        if (!first) {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        std::string word;
        if (j == 1) word = "ad";
        if (j > 1) word = "ad^" + std::to_string(j);
        if (k >= 1) {
            if (!word.empty()) word += "*";
            word += k == 1 ? "a" : "a^" + std::to_string(k);
        }
        if (word.empty()) {
            os << c;
        } else if (c == 1) {
            os << word;
        } else {
            os << c << "*" << word;
        }
    }
    return os.str();
}

DiagonalPoly::DiagonalPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

void DiagonalPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

DiagonalPoly DiagonalPoly::constant(Rational c) { return DiagonalPoly({std::move(c)}); }

DiagonalPoly DiagonalPoly::falling_factorial(unsigned k) {
    DiagonalPoly p = constant(1);
    for (unsigned i = 0; i < k; ++i)
        p = p * DiagonalPoly({Rational(-Int(i)), 1});  // (n - i)
    return p;
}

DiagonalPoly DiagonalPoly::rising_factorial(unsigned k) {
    DiagonalPoly p = constant(1);
    for (unsigned i = 1; i <= k; ++i)
        p = p * DiagonalPoly({Rational(Int(i)), 1});  // (n + i)
    return p;
}

Rational DiagonalPoly::eval(const Rational& n) const {
    Rational r = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * n + *it;
    return r;
}

DiagonalPoly& DiagonalPoly::operator+=(const DiagonalPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

DiagonalPoly operator*(const DiagonalPoly& a, const DiagonalPoly& b) {
    if (a.coeffs_.empty() || b.coeffs_.empty()) return DiagonalPoly();
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return DiagonalPoly(std::move(out));
}

std::string DiagonalPoly::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        Rational c = coeffs_[i];
        if (c == 0) continue;
        if (!first) {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        if (i == 0) {
            os << c;
        } else {
            if (c != 1) os << c << "*";
            os << (i == 1 ? "n" : "n^" + std::to_string(i));
        }
    }
    return first ? "0" : os.str();
}

namespace {
NormalForm power_nf(const NormalForm& base, unsigned e) {
    NormalForm r = NormalForm::one();
    for (unsigned i = 0; i < e; ++i) r = r * base;
    return r;
}
}  // namespace

NormalForm normal_order(const OperatorExpr& expr) {
    switch (expr.kind()) {
        case OperatorExpr::Kind::Generator:
            switch (expr.gen()) {
                case Gen::A: return NormalForm::monomial(0, 1);
                case Gen::ADag: return NormalForm::monomial(1, 0);
                case Gen::N: return NormalForm::monomial(1, 1);
                case Gen::One: return NormalForm::one();
            }
            break;
        case OperatorExpr::Kind::ScalarMul: {
            NormalForm nf = expr.children().empty() ? NormalForm::one()
                                                    : normal_order(*expr.children()[0]);
            nf *= expr.coeff();
            return nf;
        }
        case OperatorExpr::Kind::Sum: {
            NormalForm nf;
            for (const auto& c : expr.children()) nf += normal_order(*c);
            return nf;
        }
        case OperatorExpr::Kind::Product: {
            NormalForm nf = NormalForm::one();
            for (const auto& c : expr.children()) nf = nf * normal_order(*c);
            return nf;
        }
        case OperatorExpr::Kind::Power:
            return power_nf(normal_order(*expr.children()[0]), expr.exponent());
        case OperatorExpr::Kind::Commutator: {
            NormalForm x = normal_order(*expr.children()[0]);
            NormalForm y = normal_order(*expr.children()[1]);
            return x * y - y * x;
        }
    }
    return {};
}

NormalForm normal_order(const ExprPtr& expr) { return normal_order(*expr); }

NormalForm commutator(const ExprPtr& x, const ExprPtr& y) {
    NormalForm a = normal_order(x), b = normal_order(y);
    return a * b - b * a;
}

DiagonalPoly diagonal_poly(const NormalForm& nf) {
    DiagonalPoly q;
    for (const auto& [mono, coeff] : nf.terms()) {
        auto [j, k] = mono;
        if (j != k)
            throw NotDiagonal("monomial ad^" + std::to_string(j) + " a^" + std::to_string(k) +
                              " is not balanced");
        DiagonalPoly part = DiagonalPoly::falling_factorial(k);
        DiagonalPoly scaled = part * DiagonalPoly::constant(coeff);
        q += scaled;
    }
    return q;
}

}  // namespace ponzeta
