#pragma once

#include "ponzeta/errors.hpp"
#include "ponzeta/expr.hpp"
#include "ponzeta/normal_form.hpp"
#include "ponzeta/sqrt_amp.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace ponzeta {

// NumberBasis: |n> with <m|n> = delta.  DividedPower: e_n = (1/n!)(ad)^n|0>,
// so e_n = (1/sqrt(n!)) |n>.
enum class Basis { Number, DividedPower };

// Sparse vector on a truncated Fock space with exact amplitudes.
class FockVec {
  public:
    FockVec(Basis basis, std::uint64_t cutoff) : basis_(basis), cutoff_(cutoff) {}

    static FockVec basis_state(std::uint64_t n, std::uint64_t cutoff,
                               Basis basis = Basis::Number);
    static FockVec vacuum(std::uint64_t cutoff) { return basis_state(0, cutoff); }

    Basis basis() const { return basis_; }
    std::uint64_t cutoff() const { return cutoff_; }
    const std::map<std::uint64_t, SqrtAmp>& amps() const { return amps_; }
    SqrtAmp amp(std::uint64_t n) const;
    bool is_zero() const { return amps_.empty(); }

    // Throws CutoffOverflow if n > cutoff; drops exact zeros.
    void set(std::uint64_t n, SqrtAmp a);
    void add(std::uint64_t n, const SqrtAmp& a);

    FockVec& operator+=(const FockVec& o);  // same basis and cutoff
    FockVec& operator-=(const FockVec& o);
    FockVec& operator*=(const SqrtAmp& c);
    friend FockVec operator+(FockVec a, const FockVec& b) { return a += b; }
    friend FockVec operator-(FockVec a, const FockVec& b) { return a -= b; }
    friend bool operator==(const FockVec& a, const FockVec& b);

  private:
    Basis basis_;
    std::uint64_t cutoff_;
    std::map<std::uint64_t, SqrtAmp> amps_;
};

// Single ladder steps on the number basis: ad|n> = sqrt(n+1)|n+1>,
// a|n> = sqrt(n)|n-1>, a|0> = 0.  Throw CutoffOverflow past the cutoff.
FockVec apply_create(const FockVec& v);
FockVec apply_annihilate(const FockVec& v);

// Linear action of a normal-ordered operator (number basis).
FockVec apply(const NormalForm& nf, const FockVec& v);

// Independent evaluator: walks the expression tree applying generators
// directly, never through normal ordering.  The oracle route.
FockVec apply_expr(const OperatorExpr& expr, const FockVec& v);
FockVec apply_expr(const ExprPtr& expr, const FockVec& v);

// <m| nf |n> exactly; states |m>, |n> at the given cutoff.
SqrtAmp matrix_element(std::uint64_t m, const NormalForm& nf, std::uint64_t n,
                       std::uint64_t cutoff);

// <u|v>, same basis; amplitudes are real so no conjugation is needed.
SqrtAmp inner_product(const FockVec& u, const FockVec& v);

// a_p^dag = (ad)^p on |n>: sqrt((n+p)!/n!) |n+p>.
FockVec pon_create(std::uint64_t p, const FockVec& v);

// e_n <-> |n| rescaling by sqrt(n!); exact, mutually inverse.
FockVec basis_convert(const FockVec& v, Basis target);

// Columns of an operator at a truncation cutoff: column n is the image of
// |n>, or empty when the evaluation overflowed the cutoff mid-word.
// Built either from an expression (oracle route) or a NormalForm.
class TruncatedMatrix {
  public:
    static TruncatedMatrix from_expr(const ExprPtr& expr, std::uint64_t cutoff);
    static TruncatedMatrix from_normal_form(const NormalForm& nf, std::uint64_t cutoff);

    std::uint64_t cutoff() const { return cutoff_; }
    bool column_overflowed(std::uint64_t n) const { return !columns_[n].has_value(); }
    // <m| op |n>; throws CutoffOverflow when the column overflowed.
    SqrtAmp entry(std::uint64_t m, std::uint64_t n) const;

    // Entrywise equality on columns where neither side overflowed.
    friend bool agree_on_valid_columns(const TruncatedMatrix& a, const TruncatedMatrix& b);

  private:
    explicit TruncatedMatrix(std::uint64_t cutoff)
        : cutoff_(cutoff), columns_(cutoff + 1) {}
    std::uint64_t cutoff_;
    std::vector<std::optional<FockVec>> columns_;
};

}  // namespace ponzeta
