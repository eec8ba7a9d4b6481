#include "ponzeta/verify.hpp"

#include "ponzeta/fock.hpp"
#include "ponzeta/normal_form.hpp"
#include "ponzeta/pon.hpp"
#include "ponzeta/primes.hpp"
#include "ponzeta/statmech.hpp"
#include "ponzeta/zeta.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/zeta.hpp>

#include <random>
#include <sstream>

namespace ponzeta {

namespace {

void check(std::vector<CheckResult>& out, const std::string& name, bool pass,
           const std::string& detail = "") {
    out.push_back({name, pass, detail});
}

ExprPtr pon_expr(unsigned ell, bool dagger) {
    ExprPtr g = OperatorExpr::generator(dagger ? Gen::ADag : Gen::A);
    return ell == 1 ? g : OperatorExpr::power(g, ell);
}

// Random operator word of bounded degree, for the oracle and
// homomorphism properties.
ExprPtr random_word(std::mt19937& rng, unsigned max_degree) {
    std::uniform_int_distribution<unsigned> len(1, max_degree);
    std::uniform_int_distribution<int> pick(0, 2);
    std::uniform_int_distribution<int> coeff(-3, 3);
    unsigned degree = len(rng);
    std::vector<ExprPtr> factors;
    unsigned used = 0;
    while (used < degree) {
        int which = pick(rng);
        unsigned step = which == 2 ? 2 : 1;  // n-hat counts for two
        if (used + step > degree) step = 1, which = pick(rng) % 2;
        factors.push_back(OperatorExpr::generator(which == 0   ? Gen::A
                                                  : which == 1 ? Gen::ADag
                                                               : Gen::N));
        used += step;
    }
    int c = coeff(rng);
    if (c == 0) c = 1;
    ExprPtr word = factors.size() == 1 ? factors[0] : OperatorExpr::product(std::move(factors));
    return c == 1 ? word : OperatorExpr::scalar_mul(c, word);
}

Real zeta_reference(const Real& s) { return boost::math::zeta(s); }

}  // namespace

std::vector<CheckResult> verify_weyl() {
    std::vector<CheckResult> out;

    check(out, "[a, ad] = 1", commutator(parse("a"), parse("ad")) == NormalForm::one());
    check(out, "[ad, ad] = 0 and [a, a] = 0",
          commutator(parse("ad"), parse("ad")).is_zero() &&
              commutator(parse("a"), parse("a")).is_zero());
    check(out, "[n, ad] = ad and [n, a] = -a",
          commutator(parse("n"), parse("ad")) == NormalForm::monomial(1, 0) &&
              commutator(parse("n"), parse("a")) == NormalForm::monomial(0, 1, -1));
    check(out, "[a_2, a_2+] = 4n + 2",
          diagonal_poly(normal_order(parse("[a^2, ad^2]"))) == DiagonalPoly({2, 4}));
    check(out, "[a_3, a_3+] = 9n^2 + 9n + 6",
          diagonal_poly(normal_order(parse("[a^3, ad^3]"))) == DiagonalPoly({6, 9, 9}));

    bool prop1 = true;
    std::string prop1_detail;
    for (unsigned ell = 1; ell <= 10 && prop1; ++ell) {
        auto down = diagonal_poly(normal_order(
            OperatorExpr::product({pon_expr(ell, false), pon_expr(ell, true)})));
        auto up = diagonal_poly(normal_order(
            OperatorExpr::product({pon_expr(ell, true), pon_expr(ell, false)})));
        NormalForm lowering = commutator(parse("n"), pon_expr(ell, false));
        NormalForm raising = commutator(parse("n"), pon_expr(ell, true));
        NormalForm step =
            commutator(parse("a"), pon_expr(ell, true));
        NormalForm step_expected =
            NormalForm::monomial(ell - 1, 0, Rational(Int(ell)));
        prop1 = down == DiagonalPoly::rising_factorial(ell) &&
                up == DiagonalPoly::falling_factorial(ell) &&
                lowering == NormalForm::monomial(0, ell, Rational(-Int(ell))) &&
                raising == NormalForm::monomial(ell, 0, Rational(Int(ell))) &&
                step == step_expected;
        if (!prop1) prop1_detail = "first failure at ell = " + std::to_string(ell);
    }
    check(out, "ladder products and commutators, ell = 1..10", prop1, prop1_detail);

    std::mt19937 rng(20240801);
    bool idem = true, homo = true, oracle = true;
    std::string detail;
    for (int trial = 0; trial < 50 && idem && homo && oracle; ++trial) {
        ExprPtr x = random_word(rng, 6);
        ExprPtr y = random_word(rng, 6);
        NormalForm nx = normal_order(x), ny = normal_order(y);
        if (!(normal_order(nx.to_expr()) == nx)) {
            idem = false;
            detail = "idempotence failed on " + x->str();
            break;
        }
        if (!(normal_order(OperatorExpr::product({x, y})) == nx * ny)) {
            homo = false;
            detail = "product homomorphism failed on " + x->str() + " * " + y->str();
            break;
        }
        auto lhs = TruncatedMatrix::from_expr(x, 40);
        auto rhs = TruncatedMatrix::from_normal_form(nx, 40);
        if (!agree_on_valid_columns(lhs, rhs)) {
            oracle = false;
            detail = "truncated-matrix oracle failed on " + x->str();
            break;
        }
    }
    check(out, "normal ordering idempotent (50 random words)", idem, idem ? "" : detail);
    check(out, "PBW product homomorphism (50 random pairs)", homo, homo ? "" : detail);
    check(out, "truncated-matrix oracle at cutoff 40", oracle, oracle ? "" : detail);
    return out;
}

std::vector<CheckResult> verify_pon() {
    std::vector<CheckResult> out;
    std::mt19937 rng(20240802);
    std::uniform_int_distribution<std::uint64_t> idx(1, 50);

    bool comm = true;
    std::string detail;
    for (int trial = 0; trial < 200 && comm; ++trial) {
        std::uint64_t m = idx(rng), n = idx(rng);
        std::uint64_t support = std::max<std::uint64_t>(1, 200 / (m * n));
        std::uint64_t cutoff = support * m * n;  // largest index either route can reach
        FockVec v(Basis::DividedPower, cutoff);
        for (std::uint64_t i = 1; i <= support; ++i)
            v.add(i, SqrtAmp(Rational(int(rng() % 7) - 3)));
        PonOp am{PonOp::Flavor::Create, m}, an{PonOp::Flavor::Create, n};
        PonOp amn{PonOp::Flavor::Create, m * n};
        if (!(apply_pon(am, apply_pon(an, v)) == apply_pon(amn, v))) {
            comm = false;
            detail = "creation flavor, m=" + std::to_string(m) + " n=" + std::to_string(n);
        }
        PonOp bm{PonOp::Flavor::Annihilate, m}, bn{PonOp::Flavor::Annihilate, n};
        PonOp bmn{PonOp::Flavor::Annihilate, m * n};
        if (comm && !(apply_pon(bm, apply_pon(bn, v)) == apply_pon(bmn, v))) {
            comm = false;
            detail = "annihilation flavor, m=" + std::to_string(m) + " n=" + std::to_string(n);
        }
    }
    check(out, "A_m A_n = A_{mn}, both flavors (200 random cases)", comm, detail);

    bool power = true;
    for (std::uint64_t m = 2; m <= 5 && power; ++m) {
        for (unsigned k = 1; k <= 4 && power; ++k) {
            std::uint64_t mk = 1;
            for (unsigned i = 0; i < k; ++i) mk *= m;
            FockVec v(Basis::DividedPower, 2 * mk);
            v.add(1, SqrtAmp(Rational(1)));
            v.add(2, SqrtAmp(Rational(3)));
            FockVec lhs = v;
            for (unsigned i = 0; i < k; ++i) lhs = apply_pon({PonOp::Flavor::Create, m}, lhs);
            power = lhs == apply_pon({PonOp::Flavor::Create, mk}, v);
        }
    }
    check(out, "(A_m+)^k = A_{m^k}+, k <= 4", power);

    bool kernel = true;
    for (std::uint64_t m = 2; m <= 12 && kernel; ++m) {
        for (std::uint64_t n = 1; n <= 60 && kernel; ++n) {
            FockVec v = FockVec::basis_state(n, 60, Basis::DividedPower);
            bool zero = apply_pon({PonOp::Flavor::Annihilate, m}, v).is_zero();
            kernel = zero == (n % m != 0);
        }
    }
    check(out, "A_m e_n = 0 iff m does not divide n", kernel);

    FockVec e1 = FockVec::basis_state(1, 100, Basis::DividedPower);
    FockVec all = geometric_create(100, e1, 100);
    bool lemma = all.amps().size() == 100;
    for (std::uint64_t n = 1; n <= 100 && lemma; ++n)
        lemma = all.amp(n) == SqrtAmp(Rational(1));
    FockVec back = geometric_annihilate_inverse(100, all, 100);
    lemma = lemma && back == e1;
    check(out, "geometric product / Moebius inverse pair at N = P = 100", lemma);
    return out;
}

std::vector<CheckResult> verify_zeta() {
    std::vector<CheckResult> out;

    bool mellin = true;
    std::string detail;
    for (int s_int : {2, 3, 4}) {
        for (std::uint64_t n : {1ull, 2ull, 5ull, 11ull, 20ull}) {
            Cplx s{Real(s_int)};
            auto q = mellin_kernel(s, n, Real("1e-15"));
            Real expected = boost::math::tgamma(Real(s_int)) *
                            exp(Real(-Real(s_int) * log(Real(n))));
            if (abs(q.value - Cplx(expected)) > Real("1e-12") * expected) {
                mellin = false;
                detail = "s=" + std::to_string(s_int) + " n=" + std::to_string(n);
            }
        }
    }
    check(out, "Mellin kernel = Gamma(s) n^{-s} to quadrature tolerance", mellin, detail);

    bool tails = true;
    for (int s_int : {2, 3, 4}) {
        Real ref = zeta_reference(Real(s_int));
        Real prev = 0;
        for (std::uint64_t n : {10ull, 100ull, 1000ull}) {
            auto r = zeta_via_states({Cplx(Real(s_int)), n});
            if (abs(r.value - Cplx(ref)) > r.tail_bound) tails = false;
            if (r.value.re < prev) tails = false;  // partial sums increase
            prev = r.value.re;
        }
    }
    check(out, "state-sum zeta within its own tail bound, monotone in N", tails);

    bool factors = true;
    for (std::uint64_t p : primes_up_to(50)) {
        for (int s_int : {2, 3}) {
            Cplx s{Real(s_int)};
            auto direct = euler_factor(p, s, 64);
            auto quantum = zeta_p_quantum(p, s, 1u << 20);
            Real closed_gap = abs(direct.value - euler_factor_closed(p, s));
            Real route_gap = abs(direct.value - quantum.value);
            if (closed_gap > direct.tail_bound + Real("1e-30") ||
                route_gap > direct.tail_bound + quantum.tail_bound + Real("1e-30"))
                factors = false;
        }
    }
    check(out, "Euler factor = quantum factor = closed form, p <= 50", factors);

    bool product = true;
    Real z2 = zeta_reference(Real(2));
    Real last = 0;
    for (std::uint64_t bound : {10ull, 100ull, 1000ull}) {
        auto r = euler_product(Cplx(Real(2)), bound, 64);
        if (r.value.re < last || r.value.re > z2) product = false;
        last = r.value.re;
    }
    check(out, "partial Euler products increase and stay below zeta(2)", product);

    bool tower = true;
    for (std::uint64_t m = 2; m <= 10 && tower; ++m)
        for (unsigned ell = 1; ell <= 4 && tower; ++ell) {
            auto [lhs, rhs] = power_tower_relation(m, ell, Rational(3, 2));
            tower = lhs == rhs;
        }
    check(out, "power tower relation (m^l)^{-s} = m^{-sl}, exact", tower);
    return out;
}

std::vector<CheckResult> verify_appendix() {
    std::vector<CheckResult> out;

    bool moment = true;
    for (int s_int : {2, 3, 4}) {
        MomentSpec spec;
        spec.s = Real(s_int);
        spec.n_max = 100'000'000;
        spec.method = MomentMethod::Quadrature;
        auto k = k_moment(spec);
        Real ref = boost::math::tgamma(Real(s_int)) * zeta_reference(Real(s_int));
        if (fabs(k.value - ref) > Real("1e-6") * ref) moment = false;
    }
    check(out, "K[s] quadrature = Gamma(s) zeta(s) to 1e-6, s = 2,3,4", moment);

    auto chi = DirichletCharacter::mod8();
    bool character = true;
    for (std::uint64_t n = 1; n <= 100 && character; ++n) {
        if (chi(n + 8) != chi(n)) character = false;
        for (std::uint64_t m = 1; m <= 100 && character; ++m)
            if (chi(m * n) != chi(m) * chi(n)) character = false;
    }
    check(out, "mod-8 character periodic and completely multiplicative", character);

    auto spec8 = CoefficientSpec::mod8();
    bool table = true;
    for (std::uint64_t n = 1; n <= 64 && table; ++n) {
        std::uint64_t expected = n % 2 == 1 ? std::uint64_t(1 + chi(n)) : 1;
        table = spec8.coeff(n) == expected;
    }
    check(out, "mod-8 degeneracies equal 1 + chi(n) on odd n", table);

    MomentSpec m8;
    m8.coeffs = spec8;
    m8.s = Real(2);
    m8.n_max = 100'000'000;
    m8.method = MomentMethod::Quadrature;
    auto k8 = k_moment(m8);
    auto l8 = l_function(Cplx(Real(2)), chi, 1'000'000);
    Real rhs = boost::math::tgamma(Real(2)) * (l8.value.re + zeta_reference(Real(2)));
    check(out, "K[2] = Gamma(2)(L(2,chi) + zeta(2)) to 1e-6",
          fabs(k8.value - rhs) <= Real("1e-6") * fabs(rhs));

    bool gauss = true;
    for (std::uint64_t p : primes_up_to(199)) {
        if (p == 2) continue;
        Cplx g = gauss_sum(p);
        Real root = sqrt(Real(p));
        Cplx expected = p % 4 == 1 ? Cplx(root) : Cplx(Real(0), root);
        if (abs(g - expected) > Real("1e-9")) gauss = false;
    }
    check(out, "Gauss sums match sqrt(p) / i sqrt(p), odd p < 200", gauss);

    std::mt19937 rng(20240803);
    std::uniform_int_distribution<std::uint64_t> pick(1, 1'000'000);
    bool leibniz = true;
    std::string detail;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
        for (int trial = 0; trial < 1000 && leibniz; ++trial) {
            std::uint64_t n = pick(rng), np = pick(rng);
            // Work with big integers: n n' can exceed 2^63 after scaling.
            Int lhs = Int(absolute_derivation(p, n)) * np + Int(n) * absolute_derivation(p, np);
            auto [l, m] = split_prime_power(p, n);
            auto [l2, m2] = split_prime_power(p, np);
            Int pw = 1;
            unsigned total = l + l2;
            for (unsigned i = 0; i + 1 < total; ++i) pw *= p;
            Int rhs_big = total == 0 ? Int(0) : Int(total) * pw * m * m2;
            if (lhs != rhs_big) {
                leibniz = false;
                detail = "p=" + std::to_string(p) + " n=" + std::to_string(n) +
                         " n'=" + std::to_string(np);
            }
        }
    }
    check(out, "Leibniz rule for d/dp (1000 random pairs per prime)", leibniz, detail);
    return out;
}

std::vector<CheckResult> verify_all() {
    std::vector<CheckResult> out;
    for (auto suite : {verify_weyl, verify_pon, verify_zeta, verify_appendix}) {
        auto r = suite();
        out.insert(out.end(), r.begin(), r.end());
    }
    return out;
}

}  // namespace ponzeta
