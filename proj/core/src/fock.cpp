#include "ponzeta/fock.hpp"

namespace ponzeta {

FockVec FockVec::basis_state(std::uint64_t n, std::uint64_t cutoff, Basis basis) {
    FockVec v(basis, cutoff);
    v.set(n, SqrtAmp(Rational(1)));
    return v;
}

SqrtAmp FockVec::amp(std::uint64_t n) const {
    auto it = amps_.find(n);
    return it == amps_.end() ? SqrtAmp() : it->second;
}

void FockVec::set(std::uint64_t n, SqrtAmp a) {
    if (n > cutoff_)
        throw CutoffOverflow("state index " + std::to_string(n) + " exceeds cutoff " +
                             std::to_string(cutoff_));
    if (a.is_zero())
        amps_.erase(n);
    else
        amps_[n] = std::move(a);
}

void FockVec::add(std::uint64_t n, const SqrtAmp& a) {
    if (n > cutoff_)
        throw CutoffOverflow("state index " + std::to_string(n) + " exceeds cutoff " +
                             std::to_string(cutoff_));
    auto it = amps_.find(n);
    if (it == amps_.end()) {
        if (!a.is_zero()) amps_.emplace(n, a);
        return;
    }
    it->second += a;
    if (it->second.is_zero()) amps_.erase(it);
}

FockVec& FockVec::operator+=(const FockVec& o) {
    for (const auto& [n, a] : o.amps_) add(n, a);
    return *this;
}

FockVec& FockVec::operator-=(const FockVec& o) {
    for (const auto& [n, a] : o.amps_) {
        SqrtAmp neg;
        neg -= a;
        add(n, neg);
    }
    return *this;
}

FockVec& FockVec::operator*=(const SqrtAmp& c) {
    if (c.is_zero()) {
        amps_.clear();
        return *this;
    }
    for (auto& [n, a] : amps_) a *= c;
    return *this;
}

bool operator==(const FockVec& a, const FockVec& b) {
    return a.basis_ == b.basis_ && a.amps_ == b.amps_;
}

FockVec apply_create(const FockVec& v) {
    FockVec out(v.basis(), v.cutoff());
    for (const auto& [n, a] : v.amps())
        out.add(n + 1, a * SqrtAmp::sqrt_of(n + 1));
    return out;
}

FockVec apply_annihilate(const FockVec& v) {
    FockVec out(v.basis(), v.cutoff());
    for (const auto& [n, a] : v.amps())
        if (n > 0) out.add(n - 1, a * SqrtAmp::sqrt_of(n));
    return out;
}

FockVec apply(const NormalForm& nf, const FockVec& v) {
    FockVec out(v.basis(), v.cutoff());
    for (const auto& [mono, coeff] : nf.terms()) {
        auto [j, k] = mono;
        FockVec w = v;
        for (unsigned i = 0; i < k; ++i) w = apply_annihilate(w);
        for (unsigned i = 0; i < j; ++i) w = apply_create(w);
        w *= SqrtAmp(coeff);
        out += w;
    }
    return out;
}

FockVec apply_expr(const OperatorExpr& expr, const FockVec& v) {
    switch (expr.kind()) {
        case OperatorExpr::Kind::Generator:
            switch (expr.gen()) {
                case Gen::A: return apply_annihilate(v);
                case Gen::ADag: return apply_create(v);
                case Gen::N: return apply_create(apply_annihilate(v));
                case Gen::One: return v;
            }
            break;
        case OperatorExpr::Kind::ScalarMul: {
            FockVec w = expr.children().empty() ? v : apply_expr(*expr.children()[0], v);
            w *= SqrtAmp(expr.coeff());
            return w;
        }
        case OperatorExpr::Kind::Sum: {
            FockVec out(v.basis(), v.cutoff());
            for (const auto& c : expr.children()) out += apply_expr(*c, v);
            return out;
        }
        case OperatorExpr::Kind::Product: {
            // Rightmost factor acts first.
            FockVec w = v;
            for (auto it = expr.children().rbegin(); it != expr.children().rend(); ++it)
                w = apply_expr(**it, w);
            return w;
        }
        case OperatorExpr::Kind::Power: {
            FockVec w = v;
            for (unsigned i = 0; i < expr.exponent(); ++i)
                w = apply_expr(*expr.children()[0], w);
            return w;
        }
        case OperatorExpr::Kind::Commutator: {
            const auto& x = *expr.children()[0];
            const auto& y = *expr.children()[1];
            return apply_expr(x, apply_expr(y, v)) - apply_expr(y, apply_expr(x, v));
        }
    }
    return FockVec(v.basis(), v.cutoff());
}

FockVec apply_expr(const ExprPtr& expr, const FockVec& v) { return apply_expr(*expr, v); }

SqrtAmp matrix_element(std::uint64_t m, const NormalForm& nf, std::uint64_t n,
                       std::uint64_t cutoff) {
    FockVec image = apply(nf, FockVec::basis_state(n, cutoff));
    return image.amp(m);
}

SqrtAmp inner_product(const FockVec& u, const FockVec& v) {
    SqrtAmp r;
    for (const auto& [n, a] : u.amps()) r += a * v.amp(n);
    return r;
}

FockVec pon_create(std::uint64_t p, const FockVec& v) {
    FockVec w = v;
    for (std::uint64_t i = 0; i < p; ++i) w = apply_create(w);
    return w;
}

FockVec basis_convert(const FockVec& v, Basis target) {
    if (v.basis() == target) return v;
    FockVec out(target, v.cutoff());
    for (const auto& [n, a] : v.amps()) {
        SqrtAmp root = SqrtAmp::sqrt_factorial(n);
        if (target == Basis::Number) {
            // e_n = (1/sqrt(n!)) |n>; 1/sqrt(n!) = sqrt(n!)/n!.
            Rational x2 = (root * root).rational_value();
            out.set(n, a * root * SqrtAmp(Rational(1) / x2));
        } else {
            out.set(n, a * root);
        }
    }
    return out;
}

TruncatedMatrix TruncatedMatrix::from_expr(const ExprPtr& expr, std::uint64_t cutoff) {
    TruncatedMatrix m(cutoff);
    for (std::uint64_t n = 0; n <= cutoff; ++n) {
        try {
            m.columns_[n] = apply_expr(expr, FockVec::basis_state(n, cutoff));
        } catch (const CutoffOverflow&) {
            m.columns_[n].reset();
        }
    }
    return m;
}

TruncatedMatrix TruncatedMatrix::from_normal_form(const NormalForm& nf, std::uint64_t cutoff) {
    TruncatedMatrix m(cutoff);
    for (std::uint64_t n = 0; n <= cutoff; ++n) {
        try {
            m.columns_[n] = apply(nf, FockVec::basis_state(n, cutoff));
        } catch (const CutoffOverflow&) {
            m.columns_[n].reset();
        }
    }
    return m;
}

SqrtAmp TruncatedMatrix::entry(std::uint64_t m, std::uint64_t n) const {
    if (!columns_[n])
        throw CutoffOverflow("column " + std::to_string(n) + " overflowed the cutoff");
    return columns_[n]->amp(m);
}

bool agree_on_valid_columns(const TruncatedMatrix& a, const TruncatedMatrix& b) {
    if (a.cutoff_ != b.cutoff_) return false;
    for (std::uint64_t n = 0; n <= a.cutoff_; ++n) {
        if (!a.columns_[n] || !b.columns_[n]) continue;
        if (!(*a.columns_[n] == *b.columns_[n])) return false;
    }
    return true;
}

}  // namespace ponzeta
