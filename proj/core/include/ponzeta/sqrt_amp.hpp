#pragma once

#include "ponzeta/numeric.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace ponzeta {

// Sorted distinct primes whose product is a squarefree radicand.
using Radical = std::vector<std::uint32_t>;

// Exact amplitude of the form  sum_d  r_d * sqrt(d)  with r_d rational and
// d squarefree.  Closed under +, -, *; this is all a truncated Fock space
// with real ladder coefficients ever produces.  A plain rational is the
// single term with empty radicand.
class SqrtAmp {
  public:
    SqrtAmp() = default;
    SqrtAmp(Rational r);
    SqrtAmp(int r) : SqrtAmp(Rational(r)) {}

    static SqrtAmp term(Rational coeff, Radical radicand);

    // sqrt(u) for a non-negative integer, square part pulled into the
    // rational coefficient.
    static SqrtAmp sqrt_of(std::uint64_t u);

    // sqrt(n!) via the factorization of the factorial (cached).
    static SqrtAmp sqrt_factorial(std::uint64_t n);

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const;
    // Valid only when is_rational().
    Rational rational_value() const;

    const std::map<Radical, Rational>& terms() const { return terms_; }

    Real to_real() const;
    std::string str() const;

    SqrtAmp& operator+=(const SqrtAmp& o);
    SqrtAmp& operator-=(const SqrtAmp& o);
    SqrtAmp& operator*=(const SqrtAmp& o);

    friend SqrtAmp operator+(SqrtAmp a, const SqrtAmp& b) { return a += b; }
    friend SqrtAmp operator-(SqrtAmp a, const SqrtAmp& b) { return a -= b; }
    friend SqrtAmp operator*(const SqrtAmp& a, const SqrtAmp& b);
    friend bool operator==(const SqrtAmp& a, const SqrtAmp& b) {
        return a.terms_ == b.terms_;
    }

  private:
    std::map<Radical, Rational> terms_;  // no zero coefficients stored
};

}  // namespace ponzeta
