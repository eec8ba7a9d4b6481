#pragma once

#include "ponzeta/fock.hpp"

#include <cstdint>
#include <vector>

namespace ponzeta {

// Quantum p-on endomorphism A_m^dag / A_m.  On the divided-power basis
// these are pure index maps: A_m^dag e_n = e_{mn}; A_m e_n = e_{n/m} if
// m | n, else 0.  A_1 (either flavor) is the identity.
struct PonOp {
    enum class Flavor { Create, Annihilate };
    Flavor flavor;
    std::uint64_t index;  // m >= 1
};

FockVec apply_pon(const PonOp& op, const FockVec& v);

// Multiplicativity: the composite of same-flavor ops is A with the
// product index, order-independent.  Empty list is the identity A_1.
PonOp compose_pons(const std::vector<PonOp>& ops);

// prod_{p <= P} (1 + A_p^dag + A_{p^2}^dag + ...) truncated at index N.
// By unique factorization this sends e_n to sum over multiples qn <= N.
// Requires P >= N and support on indices 1..N.
FockVec geometric_create(std::uint64_t prime_bound, const FockVec& v, std::uint64_t n_max);

// prod_{p <= P} (1 - A_p^dag): the Moebius inverse of geometric_create.
FockVec geometric_annihilate_inverse(std::uint64_t prime_bound, const FockVec& v,
                                     std::uint64_t n_max);

}  // namespace ponzeta
