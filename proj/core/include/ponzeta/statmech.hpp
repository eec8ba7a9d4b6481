#pragma once

#include "ponzeta/numeric.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace ponzeta {

// Degeneracy rule c_E for positive integer energies E.
class CoefficientSpec {
  public:
    static CoefficientSpec constant_one();
    // c_n = 2 for n = 1,7 mod 8; 0 for n = 3,5 mod 8; 1 otherwise.
    static CoefficientSpec mod8();
    static CoefficientSpec table(std::map<std::uint64_t, std::uint64_t> entries);
    static CoefficientSpec rule(std::function<std::uint64_t(std::uint64_t)> fn);

    // Lines "E c_E", ascending E; '#' comments.
    static CoefficientSpec from_file(const std::string& path);

    std::uint64_t coeff(std::uint64_t energy) const;

    // Periodic specs admit a closed-form truncated partition sum.
    bool is_periodic() const { return period_ > 0; }
    std::uint64_t period() const { return period_; }
    std::uint64_t max_coeff_hint() const;

  private:
    CoefficientSpec() = default;
    std::uint64_t period_ = 0;                    // 0: not periodic
    std::vector<std::uint64_t> residue_table_;    // index n mod period
    std::map<std::uint64_t, std::uint64_t> table_;
    std::function<std::uint64_t(std::uint64_t)> rule_;
    bool has_table_ = false;
};

struct TailValue {
    Real value{0};
    Real tail_bound{0};
};

struct CplxTailValue {
    Cplx value;
    Real tail_bound{0};
};

// Z[beta] = sum_{E=1..N} c_E e^{-beta E}, exponential tail bound.
TailValue partition_function(const CoefficientSpec& spec, const Real& beta,
                             std::uint64_t n_max);

enum class MomentMethod { Quadrature, Series };

struct MomentSpec {
    CoefficientSpec coeffs = CoefficientSpec::constant_one();
    Real s{2};
    std::uint64_t n_max = 1'000'000;
    Real tolerance{0};  // 0: default 1e-9 relative
    MomentMethod method = MomentMethod::Series;
};

// K[s] = int_0^inf beta^{s-1} Z[beta] d beta = Gamma(s) sum_E c_E E^{-s}.
// Series route sums directly; quadrature route integrates the truncated Z
// (split at beta = 1) and must agree within combined tolerances.
TailValue k_moment(const MomentSpec& spec);

class DirichletCharacter {
  public:
    // values[r] for r = 0..modulus-1; must be completely multiplicative
    // on units and zero off units.
    DirichletCharacter(std::uint64_t modulus, std::vector<int> values);

    static DirichletCharacter mod8();
    static DirichletCharacter trivial();  // modulus 1, identically 1

    std::uint64_t modulus() const { return modulus_; }
    int operator()(std::uint64_t n) const { return values_[n % modulus_]; }

  private:
    std::uint64_t modulus_;
    std::vector<int> values_;
};

int character_mod8(std::uint64_t n);

// L(s,chi) = sum chi(n) n^{-s}, partial sum to N with a character-sum
// (Abel) tail bound.  Re(s) > 1 required.
CplxTailValue l_function(const Cplx& s, const DirichletCharacter& chi, std::uint64_t n_max);

// Quadratic Gauss sum sum_{n=0..p-1} e^{2 pi i n^2 / p}; computed both
// directly and via Legendre symbols, cross-checked.
Cplx gauss_sum(std::uint64_t p);

// d/dp on positive integers: p^l m -> l p^{l-1} m (p not dividing m), else 0.
std::uint64_t absolute_derivation(std::uint64_t p, std::uint64_t n);

}  // namespace ponzeta
