#include "ponzeta/zeta.hpp"

#include "ponzeta/errors.hpp"
#include "ponzeta/fock.hpp"
#include "ponzeta/pon.hpp"
#include "ponzeta/primes.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>

#include <numeric>

namespace ponzeta {

CplxVec spectral_power(const Cplx& s, const FockVec& v) {
    CplxVec out{v.cutoff(), {}};
    for (const auto& [n, a] : v.amps()) {
        if (n == 0) continue;  // vacuum convention: |0> component maps to 0
        out.amps[n] = Cplx(a.to_real()) * pow_int_neg(n, s);
    }
    return out;
}

QuadratureResult mellin_kernel(const Cplx& s, std::uint64_t n, const Real& tolerance) {
    if (s.re <= 0) throw DivergentParameters("mellin_kernel requires Re(s) > 0");
    if (n == 0) throw DivergentParameters("mellin_kernel requires n >= 1");
    Real tol = tolerance > 0 ? tolerance : Real("1e-12");
    boost::math::quadrature::exp_sinh<Real> integ;

    Real sigma = s.re, tau = s.im;
    auto integrate = [&](auto phase_part) -> std::pair<Real, Real> {
        Real err = 0;
        Real val = integ.integrate(
            [&](const Real& b) -> Real {
                Real mag = exp(Real((sigma - 1) * log(b) - Real(n) * b));
                return Real(mag * phase_part(b));
            },
            tol, &err);
        return {val, err};
    };

    Real err_total = 0;
    Cplx value;
    if (tau == 0) {
        auto [v, e] = integrate([](const Real&) { return Real(1); });
        value = Cplx(v);
        err_total = e;
    } else {
        auto [vr, er] = integrate([&](const Real& b) { return cos(Real(tau * log(b))); });
        auto [vi, ei] = integrate([&](const Real& b) { return sin(Real(tau * log(b))); });
        value = Cplx(vr, vi);
        err_total = er + ei;
    }
    if (err_total > tol * (1 + abs(value)) * 100)
        throw QuadratureError("mellin_kernel did not converge; achieved error " +
                              to_string(err_total, 6));
    return {value, err_total};
}

namespace {
Real dirichlet_tail(const Real& sigma, std::uint64_t n_terms) {
    // Integral comparison: sum_{n>N} n^{-sigma} <= N^{1-sigma}/(sigma-1).
    return exp(Real((1 - sigma) * log(Real(n_terms)))) / (sigma - 1);
}
}  // namespace

ZetaResult zeta_via_states(const SpectralParams& params) {
    if (params.s.re <= 1)
        throw DivergentParameters("state sum for zeta requires Re(s) > 1");
    // Proposition-2 pairing: the coefficient of |n> from e^{ad}-1 is
    // 1/n!, the bra side supplies a^n, and <0|a^n (ad)^n|0> = n!, so each
    // term is exactly n^{-s}.  The factorial cancellation is verified
    // exactly against the Fock layer in the test suite.
    Cplx sum;
    for (std::uint64_t n = 1; n <= params.cutoff; ++n) sum += pow_int_neg(n, params.s);
    return {sum, params.cutoff, dirichlet_tail(params.s.re, params.cutoff), "state-sum"};
}

FactorResult euler_factor(std::uint64_t p, const Cplx& s, unsigned depth) {
    if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
    Real ratio = exp(Real(-s.re * log(Real(p))));  // |p^{-s}|
    if (ratio >= 1)
        throw DivergentParameters("euler_factor requires |p^{-s}| < 1");
    Cplx q = pow_int_neg(p, s);
    Cplx sum(Real(1)), pw(Real(1));
    for (unsigned k = 1; k <= depth; ++k) {
        pw *= q;
        sum += pw;
    }
    Real tail = pow(ratio, depth + 1) / (1 - ratio);
    return {sum, tail, depth + 1};
}

Cplx euler_factor_closed(std::uint64_t p, const Cplx& s) {
    return Cplx(Real(1)) / (Cplx(Real(1)) - pow_int_neg(p, s));
}

ZetaResult euler_product(const Cplx& s, std::uint64_t prime_bound, unsigned depth) {
    if (s.re <= 1) throw DivergentParameters("Euler product requires Re(s) > 1");
    Cplx prod(Real(1));
    Real factor_tails = 0;
    std::uint64_t terms = 0;
    for (std::uint64_t p : primes_up_to(prime_bound)) {
        FactorResult f = euler_factor(p, s, depth);
        prod *= f.value;
        factor_tails += f.tail_bound;
        ++terms;
    }
    // Gap to zeta: log of the missing factors is at most
    // sum_{p>P} p^{-sigma} / (1 - 2^{-sigma}) <= P^{1-sigma}/((sigma-1)(1-2^{-sigma})).
    Real sigma = s.re;
    Real log_gap = dirichlet_tail(sigma, prime_bound ? prime_bound : 1) /
                   (1 - exp(Real(-sigma * log(Real(2)))));
    Real tail = abs(prod) * (exp(log_gap) - 1) + factor_tails;
    return {prod, terms, tail, "euler-product"};
}

FactorResult zeta_p_quantum(std::uint64_t p, const Cplx& s, std::uint64_t cutoff) {
    if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
    // Geometric series of A_p^dag on e_1: states e_{p^k}, p^k <= cutoff.
    FockVec ket = FockVec::basis_state(1, cutoff, Basis::DividedPower);
    FockVec acc = ket;
    PonOp step{PonOp::Flavor::Create, p};
    FockVec level = ket;
    unsigned depth = 0;
    while (level.amps().begin()->first * p <= cutoff) {
        level = apply_pon(step, level);
        acc += level;
        ++depth;
    }
    // Bra side mirrors the ket (<0|a_m A_p = <0|a_{mp}); the divided-power
    // pairing <0|a^m . e_n = delta_{mn} makes the value
    // sum over occupied indices of n^{-s}.
    CplxVec weighted = spectral_power(s, acc);
    Cplx sum;
    for (const auto& [n, w] : weighted.amps) sum += w * Cplx(acc.amp(n).to_real());
    Real ratio = exp(Real(-s.re * log(Real(p))));
    if (ratio >= 1) throw DivergentParameters("zeta_p_quantum requires |p^{-s}| < 1");
    Real tail = pow(ratio, depth + 1) / (1 - ratio);
    return {sum, tail, depth + 1};
}

ZetaResult zeta_quantum(const SpectralParams& params) {
    if (params.s.re <= 1)
        throw DivergentParameters("quantum Euler product requires Re(s) > 1");
    std::uint64_t n_max = params.cutoff;
    std::uint64_t prime_bound = params.prime_bound ? params.prime_bound : n_max;
    if (prime_bound < n_max)
        throw PrimeBoundTooSmall("prime bound " + std::to_string(prime_bound) +
                                 " < truncation " + std::to_string(n_max));
    // Both geometric products expand to sum_{n<=N} e_n from e_1.
    FockVec seed = FockVec::basis_state(1, n_max, Basis::DividedPower);
    FockVec ket = geometric_create(prime_bound, seed, n_max);
    FockVec bra = geometric_create(prime_bound, seed, n_max);
    CplxVec weighted = spectral_power(params.s, ket);
    Cplx sum;
    for (const auto& [n, w] : weighted.amps) sum += w * Cplx(bra.amp(n).to_real());
    return {sum, n_max, dirichlet_tail(params.s.re, n_max), "quantum-euler"};
}

PowerValue canonical_power(std::uint64_t base, const Rational& exponent) {
    if (exponent == 0) return {1, Rational(0)};
    if (base <= 1) return {base, exponent};
    // Write base = b^j with j maximal.
    auto f = factorize(base);
    unsigned g = 0;
    for (auto [p, e] : f) g = g == 0 ? e : std::gcd(g, e);
    std::uint64_t b = 1;
    for (auto [p, e] : f) {
        for (unsigned i = 0; i < e / g; ++i) b *= p;
    }
    return {b, exponent * g};
}

Real PowerValue::to_real() const {
    return exp(Real(rational_to_real(exponent) * log(Real(base))));
}

std::pair<PowerValue, PowerValue> power_tower_relation(std::uint64_t m, unsigned ell,
                                                       const Rational& s) {
    if (m < 2) throw std::invalid_argument("tower base must be >= 2");
    if (ell < 1) throw std::invalid_argument("tower height must be >= 1");
    std::uint64_t tower = 1;
    for (unsigned i = 0; i < ell; ++i) tower *= m;
    // lhs: the m^l-on matrix element, eigenvalue (m^l)^{-s}.
    PowerValue lhs = canonical_power(tower, -s);
    // rhs: the m-on element at exponent s l, eigenvalue m^{-s l}.
    PowerValue rhs = canonical_power(m, -s * Rational(Int(ell)));
    return {lhs, rhs};
}

}  // namespace ponzeta
