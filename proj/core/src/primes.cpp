#include "ponzeta/primes.hpp"

#include "ponzeta/errors.hpp"

namespace ponzeta {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull}) {
        if (n == d) return true;
        if (n % d == 0) return false;
    }
    for (std::uint64_t d = 11; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
    std::vector<std::uint64_t> out;
    if (bound < 2) return out;
    std::vector<bool> composite(bound + 1, false);
    for (std::uint64_t i = 2; i <= bound; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
    }
    return out;
}

std::vector<int> mobius_up_to(std::uint64_t bound) {
    std::vector<int> mu(bound + 1, 1);
    std::vector<std::uint64_t> least(bound + 1, 0);
    for (std::uint64_t i = 2; i <= bound; ++i) {
        if (least[i]) continue;
        for (std::uint64_t j = i; j <= bound; j += i)
            if (!least[j]) least[j] = i;
        for (std::uint64_t j = i * i; j <= bound; j += i * i) mu[j] = 0;
    }
    for (std::uint64_t i = 2; i <= bound; ++i) {
        if (mu[i] == 0) continue;
        std::uint64_t n = i;
        int parity = 1;
        while (n > 1) {
            std::uint64_t p = least[n];
            parity = -parity;
            while (n % p == 0) n /= p;
        }
        mu[i] = parity;
    }
    return mu;
}

std::map<std::uint64_t, unsigned> factorize(std::uint64_t n) {
    std::map<std::uint64_t, unsigned> f;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        while (n % p == 0) {
            ++f[p];
            n /= p;
        }
    }
    if (n > 1) ++f[n];
    return f;
}

std::pair<unsigned, std::uint64_t> split_prime_power(std::uint64_t p, std::uint64_t n) {
    unsigned l = 0;
    while (n % p == 0) {
        n /= p;
        ++l;
    }
    return {l, n};
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    unsigned __int128 r = 1, b = base % mod;
    while (exp) {
        if (exp & 1) r = r * b % mod;
        b = b * b % mod;
        exp >>= 1;
    }
    return std::uint64_t(r);
}

int legendre_symbol(std::uint64_t n, std::uint64_t p) {
    if (p == 2 || !is_prime(p)) throw NotPrime("legendre_symbol requires an odd prime");
    n %= p;
    if (n == 0) return 0;
    std::uint64_t e = pow_mod(n, (p - 1) / 2, p);
    return e == 1 ? 1 : -1;
}

}  // namespace ponzeta
