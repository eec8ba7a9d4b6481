#include "ponzeta/errors.hpp"
#include "ponzeta/primes.hpp"
#include "ponzeta/statmech.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <boost/math/special_functions/gamma.hpp>

#include <cstdio>
#include <random>

using namespace ponzeta;

TEST_CASE("partition function closed forms") {
    auto r = partition_function(CoefficientSpec::constant_one(), Real(1), 1'000);
    Real want = 1 / boost::math::expm1(Real(1));  // 1/(e-1)
    CHECK(fabs(r.value - want) <= r.tail_bound + Real("1e-30"));
    CHECK(fabs(want - Real("0.581976706869326424385")) < Real("1e-15"));

    auto single = partition_function(CoefficientSpec::table({{1, 1}}), log(Real(2)), 10);
    CHECK(fabs(single.value - Real(0.5)) < Real("1e-30"));
}

TEST_CASE("mod-8 degeneracies feed the partition sum") {
    auto spec = CoefficientSpec::mod8();
    CHECK(spec.coeff(1) == 2);
    CHECK(spec.coeff(2) == 1);
    CHECK(spec.coeff(3) == 0);
    CHECK(spec.coeff(7) == 2);
    CHECK(spec.coeff(9) == 2);

    auto r = partition_function(spec, Real(1), 3);
    Real want = 2 * exp(Real(-1)) + exp(Real(-2));
    CHECK(fabs(r.value - want) < Real("1e-30"));
}

TEST_CASE("periodic closed form equals the naive loop") {
    auto naive = [](const CoefficientSpec& spec, const Real& beta, std::uint64_t n) -> Real {
        Real total = 0;
        for (std::uint64_t e = 1; e <= n; ++e)
            total += Real(spec.coeff(e)) * exp(Real(-beta * Real(e)));
        return total;
    };
    for (const auto& spec : {CoefficientSpec::constant_one(), CoefficientSpec::mod8()}) {
        for (double beta : {0.25, 1.0, 3.0}) {
            for (std::uint64_t n : {1ull, 7ull, 8ull, 9ull, 100ull, 1000ull}) {
                auto fast = partition_function(spec, Real(beta), n);
                CHECK(fabs(fast.value - naive(spec, Real(beta), n)) < Real("1e-25"));
            }
        }
    }
}

TEST_CASE("moment integral: series route") {
    MomentSpec spec;
    spec.s = Real(2);
    spec.n_max = 2'000'000;
    auto r = k_moment(spec);
    // Gamma(2) zeta(2)
    CHECK(fabs(r.value - oracles::zeta_em(Real(2))) <= r.tail_bound + Real("1e-25"));

    spec.s = Real(3);
    auto r3 = k_moment(spec);
    CHECK(fabs(r3.value - 2 * oracles::zeta_em(Real(3))) <= r3.tail_bound + Real("1e-25"));

    MomentSpec one;
    one.coeffs = CoefficientSpec::table({{1, 1}});
    one.s = Real("2.5");
    CHECK(fabs(k_moment(one).value - boost::math::tgamma(Real("2.5"))) < Real("1e-20"));
}

TEST_CASE("moment integral: quadrature route agrees with Gamma(s) zeta(s)") {
    for (int s = 2; s <= 4; ++s) {
        MomentSpec spec;
        spec.s = Real(s);
        spec.n_max = 100'000'000;
        spec.method = MomentMethod::Quadrature;
        auto r = k_moment(spec);
        Real want = boost::math::tgamma(Real(s)) * oracles::zeta_em(Real(s));
        CAPTURE(s);
        CHECK(fabs(r.value - want) <= Real("1e-6") * want);
    }
}

TEST_CASE("mod-8 character values and structure") {
    CHECK(character_mod8(7) == 1);
    CHECK(character_mod8(3) == -1);
    CHECK(character_mod8(4) == 0);
    CHECK(character_mod8(1) == 1);
    CHECK(character_mod8(5) == -1);
    for (std::uint64_t n = 1; n <= 100; ++n) {
        CHECK(character_mod8(n + 8) == character_mod8(n));
        for (std::uint64_t m = 1; m <= 100; ++m)
            CHECK(character_mod8(m * n) == character_mod8(m) * character_mod8(n));
    }
}

TEST_CASE("mod-8 degeneracies decompose as 1 + chi on odd energies") {
    auto spec = CoefficientSpec::mod8();
    for (std::uint64_t n = 1; n <= 64; ++n) {
        if (n % 2 == 1)
            CHECK(std::int64_t(spec.coeff(n)) == 1 + character_mod8(n));
        else
            CHECK(spec.coeff(n) == 1);
    }
}

TEST_CASE("L function: trivial character collapses to zeta") {
    auto r = l_function(Cplx(2), DirichletCharacter::trivial(), 10'000);
    CHECK(abs(r.value - Cplx(oracles::zeta_em(Real(2)))) <= r.tail_bound);
}

TEST_CASE("L function at s = 2 for the mod-8 character") {
    auto r = l_function(Cplx(2), DirichletCharacter::mod8(), 1'000'000);
    // Direct partial-sum oracle
    Real direct = 0;
    for (std::uint64_t n = 1; n <= 50'000; ++n)
        direct += Real(character_mod8(n)) / (Real(n) * n);
    CHECK(abs(r.value - Cplx(direct)) < Real("1e-8"));
    CHECK(fabs(r.value.re - Real("0.87235")) < Real("1e-4"));
}

TEST_CASE("moment identity K[2] = Gamma(2) (L(2, chi) + zeta(2))") {
    MomentSpec spec;
    spec.coeffs = CoefficientSpec::mod8();
    spec.s = Real(2);
    spec.n_max = 4'000'000;
    auto k = k_moment(spec);
    auto l = l_function(Cplx(2), DirichletCharacter::mod8(), 1'000'000);
    Real rhs = boost::math::tgamma(Real(2)) * (l.value.re + oracles::zeta_em(Real(2)));
    CHECK(fabs(k.value - rhs) <= Real("1e-6") * rhs);
}

TEST_CASE("Gauss sums take the classical values") {
    CHECK(abs(gauss_sum(5) - Cplx(sqrt(Real(5)))) < Real("1e-30"));
    CHECK(abs(gauss_sum(3) - Cplx(Real(0), sqrt(Real(3)))) < Real("1e-30"));
    for (std::uint64_t p : primes_up_to(199)) {
        if (p == 2) continue;
        Cplx g = gauss_sum(p);
        Real norm2 = g.re * g.re + g.im * g.im;
        CAPTURE(p);
        CHECK(fabs(norm2 - Real(p)) < Real("1e-25"));
    }
    CHECK_THROWS_AS(gauss_sum(2), NotPrime);
    CHECK_THROWS_AS(gauss_sum(9), NotPrime);
}

TEST_CASE("absolute derivation formula and kernel") {
    CHECK(absolute_derivation(2, 12) == 12);
    CHECK(absolute_derivation(3, 5) == 0);
    CHECK(absolute_derivation(2, 2) == 1);
    CHECK(absolute_derivation(5, 5) == 1);
    CHECK(absolute_derivation(3, 27) == 27);  // 3 * 3^2
    CHECK_THROWS_AS(absolute_derivation(6, 10), NotPrime);
}

TEST_CASE("absolute derivation satisfies the Leibniz rule") {
    std::mt19937 rng(7103);
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
        for (int i = 0; i < 1000; ++i) {
            std::uint64_t n = 1 + rng() % 1'000'000;
            std::uint64_t np = 1 + rng() % 1'000'000;
            CAPTURE(p); CAPTURE(n); CAPTURE(np);
            // All quantities fit comfortably in 64 bits: n n' <= 10^12.
            unsigned __int128 lhs = absolute_derivation(p, n * np);
            unsigned __int128 rhs =
                (unsigned __int128)absolute_derivation(p, n) * np +
                (unsigned __int128)n * absolute_derivation(p, np);
            CHECK((lhs == rhs));
        }
    }
}

TEST_CASE("coefficient tables load from files") {
    std::string path = "coeffs_test.tmp";
    std::FILE* f = std::fopen(path.c_str(), "w");
    std::fputs("# test spectrum\n1 2\n3 1\n10 4\n", f);
    std::fclose(f);
    auto spec = CoefficientSpec::from_file(path);
    CHECK(spec.coeff(1) == 2);
    CHECK(spec.coeff(2) == 0);
    CHECK(spec.coeff(3) == 1);
    CHECK(spec.coeff(10) == 4);
    std::remove(path.c_str());
}
