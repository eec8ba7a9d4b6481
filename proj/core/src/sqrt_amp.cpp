#include "ponzeta/sqrt_amp.hpp"

#include "ponzeta/primes.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <unordered_map>

namespace ponzeta {

SqrtAmp::SqrtAmp(Rational r) {
    if (r != 0) terms_[{}] = std::move(r);
}

SqrtAmp SqrtAmp::term(Rational coeff, Radical radicand) {
    SqrtAmp a;
    if (coeff != 0) a.terms_[std::move(radicand)] = std::move(coeff);
    return a;
}

SqrtAmp SqrtAmp::sqrt_of(std::uint64_t u) {
    if (u == 0) return SqrtAmp();
    Rational coeff = 1;
    Radical rad;
    for (auto [p, e] : factorize(u)) {
        if (e / 2 > 0) {
            Int sq = 1;
            for (unsigned i = 0; i < e / 2; ++i) sq *= p;
            coeff *= Rational(sq);
        }
        if (e % 2) rad.push_back(std::uint32_t(p));
    }
    return term(std::move(coeff), std::move(rad));
}

SqrtAmp SqrtAmp::sqrt_factorial(std::uint64_t n) {
    static std::mutex m;
    static std::unordered_map<std::uint64_t, SqrtAmp> cache;
    std::lock_guard<std::mutex> lock(m);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    SqrtAmp r(Rational(1));
    for (std::uint64_t i = 2; i <= n; ++i) r *= sqrt_of(i);
    cache.emplace(n, r);
    return r;
}

bool SqrtAmp::is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational SqrtAmp::rational_value() const {
    if (terms_.empty()) return 0;
    return terms_.begin()->second;
}

Real SqrtAmp::to_real() const {
    Real r = 0;
    for (const auto& [rad, coeff] : terms_) {
        Int d = 1;
        for (auto p : rad) d *= p;
        r += rational_to_real(coeff) * sqrt(Real(d));
    }
    return r;
}

SqrtAmp& SqrtAmp::operator+=(const SqrtAmp& o) {
    for (const auto& [rad, coeff] : o.terms_) {
        auto it = terms_.find(rad);
        if (it == terms_.end()) {
            terms_.emplace(rad, coeff);
        } else {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

SqrtAmp& SqrtAmp::operator-=(const SqrtAmp& o) {
    for (const auto& [rad, coeff] : o.terms_) {
        auto it = terms_.find(rad);
        if (it == terms_.end()) {
            terms_.emplace(rad, -coeff);
        } else {
            it->second -= coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

SqrtAmp operator*(const SqrtAmp& a, const SqrtAmp& b) {
    // sqrt(d1) sqrt(d2) = (prod of common primes) sqrt(d1 xor d2)
    SqrtAmp out;
    for (const auto& [r1, c1] : a.terms_) {
        for (const auto& [r2, c2] : b.terms_) {
            Radical sym;
            std::set_symmetric_difference(r1.begin(), r1.end(), r2.begin(), r2.end(),
                                          std::back_inserter(sym));
            Int common = 1;
            Radical inter;
            std::set_intersection(r1.begin(), r1.end(), r2.begin(), r2.end(),
                                  std::back_inserter(inter));
            for (auto p : inter) common *= p;
            out += SqrtAmp::term(Rational(c1 * c2 * Rational(common)), std::move(sym));
        }
    }
    return out;
}

SqrtAmp& SqrtAmp::operator*=(const SqrtAmp& o) {
    *this = *this * o;
    return *this;
}

std::string SqrtAmp::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [rad, coeff] : terms_) {
        Rational c = coeff;
        if (!first) {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        if (rad.empty()) {
            os << c;
        } else {
            Int d = 1;
            for (auto p : rad) d *= p;
            if (c != 1) os << c << "*";
            os << "sqrt(" << d << ")";
        }
    }
    return os.str();
}

}  // namespace ponzeta
