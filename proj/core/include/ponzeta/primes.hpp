#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace ponzeta {

bool is_prime(std::uint64_t n);

// All primes <= bound, ascending.
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

// Moebius function mu(n) for n = 0..bound (mu[0] unused).
std::vector<int> mobius_up_to(std::uint64_t bound);

// Prime factorization by trial division; suitable for the small
// integers this library meets (indices, radicands).
std::map<std::uint64_t, unsigned> factorize(std::uint64_t n);

// n = p^l * m with p not dividing m; returns (l, m).
std::pair<unsigned, std::uint64_t> split_prime_power(std::uint64_t p, std::uint64_t n);

// Legendre symbol (n/p) for an odd prime p, via Euler's criterion.
int legendre_symbol(std::uint64_t n, std::uint64_t p);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

}  // namespace ponzeta
