#pragma once

// Independent reference computations for the test suites.  Everything
// here is written against the definitions, not against the library's
// own evaluation paths, so a shared bug cannot hide.

#include "ponzeta/expr.hpp"
#include "ponzeta/numeric.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace oracles {

using ponzeta::Real;

// zeta(s) for real s > 1 by Euler-Maclaurin: partial sum to N plus the
// integral term and Bernoulli corrections through B_8.  For N >= 50 and
// s in [2, 10] the truncation error is far below 1e-20.
inline Real zeta_em(const Real& s, std::uint64_t n_terms = 100) {
    Real sum = 0;
    for (std::uint64_t n = 1; n <= n_terms; ++n)
        sum += exp(Real(-s * log(Real(n))));
    Real n = Real(n_terms);
    Real ninv = 1 / n;
    Real npow = exp(Real(-s * log(n)));  // N^{-s}
    sum += npow * n / (s - 1);           // N^{1-s}/(s-1)
    sum -= npow / 2;
    Real prod = s;
    sum += prod / 12 * npow * ninv;
    prod *= (s + 1) * (s + 2);
    sum -= prod / 720 * npow * ninv * ninv * ninv;
    prod *= (s + 3) * (s + 4);
    sum += prod / 30240 * npow * pow(ninv, 5);
    prod *= (s + 5) * (s + 6);
    sum -= prod / 1209600 * npow * pow(ninv, 7);
    return sum;
}

// Random operator expressions with total generator degree <= max_degree.
// Sums of a few products of generator powers with small rational scalars;
// enough variety to exercise every normal-ordering path.
class ExprGen {
  public:
    explicit ExprGen(std::uint32_t seed) : rng_(seed) {}

    ponzeta::ExprPtr word(unsigned max_degree) {
        std::vector<ponzeta::ExprPtr> factors;
        unsigned budget = max_degree;
        unsigned n_factors = 1 + rng_() % 3;
        for (unsigned i = 0; i < n_factors && budget > 0; ++i) {
            unsigned e = 1 + rng_() % std::min(budget, 3u);
            budget -= e;
            ponzeta::ExprPtr g = pick_generator();
            factors.push_back(e == 1 ? g : ponzeta::OperatorExpr::power(g, e));
        }
        if (factors.empty()) factors.push_back(ponzeta::OperatorExpr::scalar(1));
        auto w = factors.size() == 1 ? factors[0]
                                     : ponzeta::OperatorExpr::product(std::move(factors));
        if (rng_() % 3 == 0) w = ponzeta::OperatorExpr::scalar_mul(small_rational(), w);
        return w;
    }

    ponzeta::ExprPtr expr(unsigned max_degree) {
        unsigned n_terms = 1 + rng_() % 3;
        std::vector<ponzeta::ExprPtr> terms;
        for (unsigned i = 0; i < n_terms; ++i) terms.push_back(word(max_degree));
        return terms.size() == 1 ? terms[0] : ponzeta::OperatorExpr::sum(std::move(terms));
    }

    std::mt19937& rng() { return rng_; }

  private:
    ponzeta::ExprPtr pick_generator() {
        switch (rng_() % 3) {
            case 0: return ponzeta::OperatorExpr::generator(ponzeta::Gen::A);
            case 1: return ponzeta::OperatorExpr::generator(ponzeta::Gen::ADag);
            default: return ponzeta::OperatorExpr::generator(ponzeta::Gen::N);
        }
    }

    ponzeta::Rational small_rational() {
        int num = int(rng_() % 9) - 4;
        if (num == 0) num = 5;
        unsigned den = 1 + rng_() % 4;
        return ponzeta::Rational(num, den);
    }

    std::mt19937 rng_;
};

}  // namespace oracles
