#pragma once

#include "ponzeta/numeric.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>

namespace ponzeta {

class FockVec;

struct SpectralParams {
    Cplx s;
    std::uint64_t cutoff = 64;     // truncation N of the state sum
    unsigned depth = 64;           // K for geometric 1/(1-(ad a)^{-s}) series
    std::uint64_t prime_bound = 0; // P; 0 means "same as cutoff"
};

struct ZetaResult {
    Cplx value;
    std::uint64_t terms_used = 0;
    Real tail_bound{0};
    std::string method;
};

struct FactorResult {
    Cplx value;
    Real tail_bound{0};
    std::uint64_t terms_used = 0;
};

struct QuadratureResult {
    Cplx value;
    Real error_estimate{0};
};

// (ad a)^{-s} on the number basis: |n> -> n^{-s}|n> for n >= 1, and the
// |0> component maps to 0 (vacuum convention; every state sum here starts
// at n = 1).  Amplitudes leave the exact layer, hence the float output.
struct CplxVec {
    std::uint64_t cutoff;
    std::map<std::uint64_t, Cplx> amps;
};
CplxVec spectral_power(const Cplx& s, const FockVec& v);

// Raw Mellin integral int_0^inf beta^{s-1} e^{-beta n} d beta = Gamma(s) n^{-s}.
// Exposed so the Gamma(s) normalization of the spectral power is testable.
QuadratureResult mellin_kernel(const Cplx& s, std::uint64_t n, const Real& tolerance);

// zeta(s) as the vacuum pairing <0| a/(1-a) (ad a)^{-s} (e^{ad}-1) |0>
// truncated at N: sum_{n=1..N} n^{-s}, tail bound N^{1-sigma}/(sigma-1).
ZetaResult zeta_via_states(const SpectralParams& params);

// Euler factor zeta_p(s) = (1/p!)<0| a_p sum_k (ad a)^{-ks} a_p^dag |0>
// = sum_{k=0..K} p^{-ks}, geometric tail reported.
FactorResult euler_factor(std::uint64_t p, const Cplx& s, unsigned depth);
Cplx euler_factor_closed(std::uint64_t p, const Cplx& s);  // 1/(1-p^{-s})

// prod_{p <= P} euler_factor(p, s, K).
ZetaResult euler_product(const Cplx& s, std::uint64_t prime_bound, unsigned depth);

// zeta_p via the quantum route: geometric series of A_p^dag on e_1 gives
// the states e_{p^k} (k with p^k <= cutoff), paired through the spectral
// power: sum_k p^{-ks}.
FactorResult zeta_p_quantum(std::uint64_t p, const Cplx& s, std::uint64_t cutoff);

// The full quantum Euler product: geometric_create builds sum_{n<=N} e_n
// on both sides of (ad a)^{-s}; the pairing is sum_{n=1..N} n^{-s}.
ZetaResult zeta_quantum(const SpectralParams& params);

// Exact power m0^e with minimal base; the canonical form that witnesses
// (m^l)^{-s} = m^{-s l} without floating point.
struct PowerValue {
    std::uint64_t base;  // not a perfect power, or 1
    Rational exponent;
    Real to_real() const;
    friend bool operator==(const PowerValue& a, const PowerValue& b) {
        return a.base == b.base && a.exponent == b.exponent;
    }
};
PowerValue canonical_power(std::uint64_t base, const Rational& exponent);

// Both sides of the tower relation:
// lhs = (1/m^l!)<0| a_{m^l} (ad a)^{-s} a_{m^l}^dag |0> = (m^l)^{-s},
// rhs = (1/m!)<0| a_m (ad a)^{-s l} a_m^dag |0> = m^{-s l}.
std::pair<PowerValue, PowerValue> power_tower_relation(std::uint64_t m, unsigned ell,
                                                       const Rational& s);

}  // namespace ponzeta
