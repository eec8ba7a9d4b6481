#include "ponzeta/numeric.hpp"

#include "ponzeta/errors.hpp"

#include <cmath>
#include <mutex>
#include <sstream>

namespace ponzeta {

namespace {
unsigned g_precision_bits = 128;
}

void set_precision_bits(unsigned bits) {
    if (bits < 24) bits = 24;
    g_precision_bits = bits;
    // mpfr_float precision is tracked in decimal digits.
    Real::default_precision(unsigned(std::ceil(bits * 0.30103)) + 2);
}

unsigned precision_bits() { return g_precision_bits; }

Int factorial(std::uint64_t n) {
    Int r = 1;
    for (std::uint64_t i = 2; i <= n; ++i) r *= i;
    return r;
}

Real rational_to_real(const Rational& q) {
    return Real(numerator(q)) / Real(denominator(q));
}

Int binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r *= Int(n - k + i);
        r /= Int(i);
    }
    return r;
}

Cplx operator+(const Cplx& a, const Cplx& b) { return {Real(a.re + b.re), Real(a.im + b.im)}; }
Cplx operator-(const Cplx& a, const Cplx& b) { return {Real(a.re - b.re), Real(a.im - b.im)}; }

Cplx operator*(const Cplx& a, const Cplx& b) {
    return {Real(a.re * b.re - a.im * b.im), Real(a.re * b.im + a.im * b.re)};
}

Cplx operator/(const Cplx& a, const Cplx& b) {
    Real d = b.re * b.re + b.im * b.im;
    return {Real((a.re * b.re + a.im * b.im) / d), Real((a.im * b.re - a.re * b.im) / d)};
}

Cplx& operator+=(Cplx& a, const Cplx& b) { a = a + b; return a; }
Cplx& operator*=(Cplx& a, const Cplx& b) { a = a * b; return a; }

bool operator==(const Cplx& a, const Cplx& b) { return a.re == b.re && a.im == b.im; }

Real abs(const Cplx& z) { return sqrt(Real(z.re * z.re + z.im * z.im)); }
Cplx conj(const Cplx& z) { return {z.re, Real(-z.im)}; }

Cplx pow_int_neg(std::uint64_t n, const Cplx& s) {
    // n^{-s} = n^{-sigma} (cos(tau ln n) - i sin(tau ln n))
    Real ln_n = log(Real(n));
    Real mag = exp(Real(-s.re * ln_n));
    if (s.im == 0) return {mag, Real(0)};
    Real phase = s.im * ln_n;
    return {Real(mag * cos(phase)), Real(-mag * sin(phase))};
}

Cplx parse_complex(const std::string& text) {
    // Forms: "2", "-1.5", "2+0.5i", "2-0.5i", "0.5i", "-i".
    auto bad = [&] { throw ParseError("invalid complex literal '" + text + "'", 0); };
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty()) bad();

    auto parse_real = [&](const std::string& part) -> Real {
        if (part.empty() || part == "+") return Real(1);
        if (part == "-") return Real(-1);
        try {
            return Real(part);
        } catch (...) {
            bad();
            return Real(0);
        }
    };

    if (t.back() != 'i') {
        // Purely real; reject embedded 'i'.
        if (t.find('i') != std::string::npos) bad();
        return Cplx(parse_real(t));
    }
    std::string body = t.substr(0, t.size() - 1);
    // Split at the last '+'/'-' that is not an exponent sign or leading.
    std::size_t split = std::string::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
        char c = body[i];
        if ((c == '+' || c == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    if (split == std::string::npos) return Cplx(Real(0), parse_real(body));
    return Cplx(parse_real(body.substr(0, split)), parse_real(body.substr(split)));
}

std::string to_string(const Real& x, int digits) {
    std::ostringstream os;
    os << std::setprecision(digits > 0 ? digits : int(Real::default_precision())) << x;
    return os.str();
}

std::string to_string(const Cplx& z, int digits) {
    if (z.im == 0) return to_string(z.re, digits);
    std::string im = to_string(z.im, digits);
    if (!im.empty() && im[0] != '-') im = "+" + im;
    return to_string(z.re, digits) + im + "i";
}

}  // namespace ponzeta
