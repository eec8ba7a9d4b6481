#include "ponzeta/statmech.hpp"

#include "ponzeta/errors.hpp"
#include "ponzeta/primes.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/expm1.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

namespace ponzeta {

CoefficientSpec CoefficientSpec::constant_one() {
    CoefficientSpec s;
    s.period_ = 1;
    s.residue_table_ = {1};
    return s;
}

CoefficientSpec CoefficientSpec::mod8() {
    CoefficientSpec s;
    s.period_ = 8;
    // Index n mod 8: residues 1,7 -> 2; 3,5 -> 0; even -> 1.
    s.residue_table_ = {1, 2, 1, 0, 1, 0, 1, 2};
    return s;
}

CoefficientSpec CoefficientSpec::table(std::map<std::uint64_t, std::uint64_t> entries) {
    CoefficientSpec s;
    s.table_ = std::move(entries);
    s.has_table_ = true;
    return s;
}

CoefficientSpec CoefficientSpec::rule(std::function<std::uint64_t(std::uint64_t)> fn) {
    CoefficientSpec s;
    s.rule_ = std::move(fn);
    return s;
}

CoefficientSpec CoefficientSpec::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open coefficient file: " + path);
    std::map<std::uint64_t, std::uint64_t> entries;
    std::string line;
    std::uint64_t last_e = 0;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::uint64_t e, c;
        if (!(ls >> e)) continue;  // blank or comment-only line
        if (!(ls >> c))
            throw std::runtime_error("line " + std::to_string(lineno) + ": expected 'E c_E'");
        if (e == 0 || e <= last_e)
            throw std::runtime_error("line " + std::to_string(lineno) +
                                     ": energies must be positive and ascending");
        last_e = e;
        entries[e] = c;
    }
    return table(std::move(entries));
}

std::uint64_t CoefficientSpec::coeff(std::uint64_t energy) const {
    if (energy == 0) return 0;
    if (period_ > 0) return residue_table_[energy % period_];
    if (has_table_) {
        auto it = table_.find(energy);
        return it == table_.end() ? 0 : it->second;
    }
    if (rule_) return rule_(energy);
    return 0;
}

std::uint64_t CoefficientSpec::max_coeff_hint() const {
    if (period_ > 0) return *std::max_element(residue_table_.begin(), residue_table_.end());
    std::uint64_t m = 1;
    for (const auto& [e, c] : table_) m = std::max(m, c);
    return m;
}

namespace {

// sum_{E=1..N} c_E e^{-beta E} for a periodic spec, via one geometric
// series per residue class.  Cost independent of N.
Real periodic_partition(const CoefficientSpec& spec, const Real& beta, std::uint64_t n_max) {
    const std::uint64_t T = spec.period();
    Real qT = exp(Real(-beta * Real(T)));
    Real denom = -boost::math::expm1(Real(-beta * Real(T)));  // 1 - e^{-beta T}
    Real total = 0;
    for (std::uint64_t r = 1; r <= T; ++r) {
        std::uint64_t c = spec.coeff(r);
        if (c == 0 || r > n_max) continue;
        // Terms r, r+T, ..., r+(M_r-1)T with r+(M_r-1)T <= N.
        std::uint64_t m_r = (n_max - r) / T + 1;
        Real head = exp(Real(-beta * Real(r)));
        Real partial = head * (-boost::math::expm1(Real(-beta * Real(T) * Real(m_r)))) / denom;
        total += Real(c) * partial;
    }
    return total;
}

Real generic_partition(const CoefficientSpec& spec, const Real& beta, std::uint64_t n_max) {
    Real total = 0;
    for (std::uint64_t e = 1; e <= n_max; ++e) {
        std::uint64_t c = spec.coeff(e);
        if (c) total += Real(c) * exp(Real(-beta * Real(e)));
    }
    return total;
}

}  // namespace

TailValue partition_function(const CoefficientSpec& spec, const Real& beta,
                             std::uint64_t n_max) {
    if (beta <= 0) throw DivergentParameters("partition function requires beta > 0");
    Real value = spec.is_periodic() ? periodic_partition(spec, beta, n_max)
                                    : generic_partition(spec, beta, n_max);
    Real tail = Real(spec.max_coeff_hint()) * exp(Real(-beta * Real(n_max))) /
                (-boost::math::expm1(Real(-beta)));
    return {value, tail};
}

namespace {

Real series_moment(const CoefficientSpec& spec, const Real& s, std::uint64_t n_max) {
    Real sum = 0;
    for (std::uint64_t e = 1; e <= n_max; ++e) {
        std::uint64_t c = spec.coeff(e);
        if (c) sum += Real(c) * exp(Real(-s * log(Real(e))));
    }
    return boost::math::tgamma(s) * sum;
}

Real quadrature_moment(const CoefficientSpec& spec, const Real& s, std::uint64_t n_max,
                       const Real& tol) {
    auto z_trunc = [&](const Real& beta) -> Real {
        return spec.is_periodic() ? periodic_partition(spec, beta, n_max)
                                  : generic_partition(spec, beta, n_max);
    };
    // Split at beta = 1: tanh_sinh absorbs the beta^{s-1} endpoint on
    // (0,1]; exp_sinh rides the e^{-beta} decay on [1,inf).
    // The default min_complement is the type's min value; for mpfr that
    // overflows tanh_sinh's level computation.  1e-80 resolves the
    // endpoint far beyond any tolerance this route is asked for.
    boost::math::quadrature::tanh_sinh<Real> lower(15, Real("1e-80"));
    boost::math::quadrature::exp_sinh<Real> upper;
    Real err1 = 0, err2 = 0;
    Real part1 = lower.integrate(
        [&](const Real& b) -> Real { return Real(exp(Real((s - 1) * log(b))) * z_trunc(b)); },
        Real(0), Real(1), tol, &err1);
    Real part2 = upper.integrate(
        [&](const Real& b) -> Real { return Real(exp(Real((s - 1) * log(b))) * z_trunc(b)); },
        Real(1), std::numeric_limits<Real>::infinity(), tol, &err2);
    Real value = part1 + part2;
    if (err1 + err2 > tol * (1 + fabs(value)) * 100)
        throw QuadratureError("moment quadrature did not converge; achieved error " +
                              to_string(Real(err1 + err2), 6));
    return value;
}

}  // namespace

TailValue k_moment(const MomentSpec& spec) {
    const Real& s = spec.s;
    if (s <= 1) throw DivergentParameters("k_moment requires s > 1 for convergence");
    Real tol = spec.tolerance > 0 ? spec.tolerance : Real("1e-9");
    Real value = spec.method == MomentMethod::Series
                     ? series_moment(spec.coeffs, s, spec.n_max)
                     : quadrature_moment(spec.coeffs, s, spec.n_max, tol);
    // Truncation tail: Gamma(s) c_max sum_{E>N} E^{-s}.
    Real tail = boost::math::tgamma(s) * Real(spec.coeffs.max_coeff_hint()) *
                exp(Real((1 - s) * log(Real(spec.n_max)))) / (s - 1);
    return {value, tail};
}

DirichletCharacter::DirichletCharacter(std::uint64_t modulus, std::vector<int> values)
    : modulus_(modulus), values_(std::move(values)) {
    if (modulus_ == 0 || values_.size() != modulus_)
        throw std::invalid_argument("character table must have one entry per residue");
}

DirichletCharacter DirichletCharacter::mod8() {
    return DirichletCharacter(8, {0, 1, 0, -1, 0, -1, 0, 1});
}

DirichletCharacter DirichletCharacter::trivial() { return DirichletCharacter(1, {1}); }

int character_mod8(std::uint64_t n) { return DirichletCharacter::mod8()(n); }

CplxTailValue l_function(const Cplx& s, const DirichletCharacter& chi, std::uint64_t n_max) {
    if (s.re <= 1) throw DivergentParameters("l_function requires Re(s) > 1");
    Cplx sum;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        int c = chi(n);
        if (c) {
            Cplx t = pow_int_neg(n, s);
            sum += c > 0 ? t : Cplx(Real(-t.re), Real(-t.im));
        }
    }
    // Abel summation: character partial sums are bounded by the modulus,
    // so the tail is at most 2 mod (1 + |s|/sigma) N^{-sigma}.  The
    // principal (modulus 1) character falls back to the integral bound.
    Real sigma = s.re;
    Real bound;
    if (chi.modulus() == 1) {
        bound = exp(Real((1 - sigma) * log(Real(n_max)))) / (sigma - 1);
    } else {
        bound = 2 * Real(chi.modulus()) * (1 + abs(s) / sigma) *
                exp(Real(-sigma * log(Real(n_max))));
    }
    return {sum, bound};
}

Cplx gauss_sum(std::uint64_t p) {
    if (p == 2 || !is_prime(p)) throw NotPrime("gauss_sum requires an odd prime");
    Real two_pi = 2 * boost::math::constants::pi<Real>();
    Cplx direct, via_legendre;
    for (std::uint64_t n = 0; n < p; ++n) {
        Real theta = two_pi * Real((n * n) % p) / Real(p);
        direct += Cplx(cos(theta), sin(theta));
    }
    for (std::uint64_t n = 1; n < p; ++n) {
        int leg = legendre_symbol(n, p);
        Real theta = two_pi * Real(n) / Real(p);
        Cplx term(cos(theta), sin(theta));
        via_legendre += leg > 0 ? term : Cplx(Real(-term.re), Real(-term.im));
    }
    if (abs(direct - via_legendre) > Real("1e-20") * Real(p))
        throw std::logic_error("gauss sum cross-check failed");
    return direct;
}

std::uint64_t absolute_derivation(std::uint64_t p, std::uint64_t n) {
    if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
    if (n == 0) throw std::invalid_argument("absolute derivation is defined for n >= 1");
    auto [l, m] = split_prime_power(p, n);
    if (l == 0) return 0;
    std::uint64_t pw = 1;
    for (unsigned i = 0; i + 1 < l; ++i) pw *= p;
    return std::uint64_t(l) * pw * m;
}

}  // namespace ponzeta
