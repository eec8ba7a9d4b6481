#include "ponzeta/pon.hpp"

#include "ponzeta/primes.hpp"

#include <stdexcept>

namespace ponzeta {

namespace {
void require_divided_power(const FockVec& v) {
    if (v.basis() != Basis::DividedPower)
        throw std::invalid_argument("p-on endomorphisms act on the divided-power basis");
}
}  // namespace

FockVec apply_pon(const PonOp& op, const FockVec& v) {
    require_divided_power(v);
    if (op.index == 0) throw std::invalid_argument("p-on index must be >= 1");
    if (op.index == 1) return v;
    FockVec out(v.basis(), v.cutoff());
    for (const auto& [n, a] : v.amps()) {
        if (op.flavor == PonOp::Flavor::Create) {
            out.add(n * op.index, a);  // add() throws CutoffOverflow past N
        } else {
            if (n % op.index == 0) out.add(n / op.index, a);
        }
    }
    return out;
}

PonOp compose_pons(const std::vector<PonOp>& ops) {
    if (ops.empty()) return {PonOp::Flavor::Create, 1};
    PonOp out = ops.front();
    for (std::size_t i = 1; i < ops.size(); ++i) {
        if (ops[i].flavor != out.flavor)
            throw std::invalid_argument("compose_pons requires a single flavor");
        out.index *= ops[i].index;
    }
    return out;
}

FockVec geometric_create(std::uint64_t prime_bound, const FockVec& v, std::uint64_t n_max) {
    require_divided_power(v);
    if (prime_bound < n_max)
        throw PrimeBoundTooSmall("prime bound " + std::to_string(prime_bound) +
                                 " < truncation " + std::to_string(n_max));
    FockVec out(v.basis(), v.cutoff());
    for (const auto& [n, a] : v.amps()) {
        if (n == 0)
            throw std::invalid_argument(
                "geometric p-on series diverges on the vacuum component e_0");
        if (n > n_max) continue;
        // Unique factorization: the expanded product hits each multiple
        // q n <= N exactly once.
        for (std::uint64_t q = 1; q * n <= n_max; ++q) out.add(q * n, a);
    }
    return out;
}

FockVec geometric_annihilate_inverse(std::uint64_t prime_bound, const FockVec& v,
                                     std::uint64_t n_max) {
    require_divided_power(v);
    if (prime_bound < n_max)
        throw PrimeBoundTooSmall("prime bound " + std::to_string(prime_bound) +
                                 " < truncation " + std::to_string(n_max));
    auto mu = mobius_up_to(n_max);
    FockVec out(v.basis(), v.cutoff());
    for (const auto& [n, a] : v.amps()) {
        if (n == 0)
            throw std::invalid_argument(
                "Moebius p-on product is undefined on the vacuum component e_0");
        if (n > n_max) continue;
        for (std::uint64_t d = 1; d * n <= n_max; ++d) {
            if (mu[d] == 0) continue;
            SqrtAmp signed_amp = a;
            if (mu[d] < 0) {
                SqrtAmp neg;
                neg -= a;
                signed_amp = neg;
            }
            out.add(d * n, signed_amp);
        }
    }
    return out;
}

}  // namespace ponzeta
