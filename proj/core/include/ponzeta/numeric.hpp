#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cstdint>
#include <string>

namespace ponzeta {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Arbitrary-precision real; working precision is process-global and set
// once at startup (set_precision_bits).
using Real = boost::multiprecision::mpfr_float;

void set_precision_bits(unsigned bits);
unsigned precision_bits();

Int factorial(std::uint64_t n);
Int binomial(std::uint64_t n, std::uint64_t k);

// Convert an exact rational to the working precision.  Goes through
// numerator/denominator separately: boost's generic rational-to-float
// interconvert is orders of magnitude slower.
Real rational_to_real(const Rational& q);

// Complex value over Real.  Only the operations the spectral calculus
// needs; not a general complex library.
struct Cplx {
    Real re{0};
    Real im{0};

    Cplx() = default;
    Cplx(Real r) : re(std::move(r)) {}
    Cplx(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    Cplx(double r) : re(r) {}
    Cplx(int r) : re(r) {}

    bool is_real() const { return im == 0; }
};

Cplx operator+(const Cplx& a, const Cplx& b);
Cplx operator-(const Cplx& a, const Cplx& b);
Cplx operator*(const Cplx& a, const Cplx& b);
Cplx operator/(const Cplx& a, const Cplx& b);
Cplx& operator+=(Cplx& a, const Cplx& b);
Cplx& operator*=(Cplx& a, const Cplx& b);
bool operator==(const Cplx& a, const Cplx& b);

Real abs(const Cplx& z);
Cplx conj(const Cplx& z);

// n^{-s} for a positive integer n; the eigenvalue of the spectral power.
Cplx pow_int_neg(std::uint64_t n, const Cplx& s);

// Parse "2", "-1.5", "2+0.5i", "0.5i" into a complex value.
Cplx parse_complex(const std::string& text);

std::string to_string(const Real& x, int digits = 0);
std::string to_string(const Cplx& z, int digits = 0);

}  // namespace ponzeta
