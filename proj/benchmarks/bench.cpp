#include "ponzeta/fock.hpp"
#include "ponzeta/normal_form.hpp"
#include "ponzeta/pon.hpp"
#include "ponzeta/statmech.hpp"
#include "ponzeta/zeta.hpp"

#include <benchmark/benchmark.h>

using namespace ponzeta;

namespace {

void BM_NormalOrderCommutator(benchmark::State& state) {
    unsigned ell = unsigned(state.range(0));
    auto lhs = OperatorExpr::power(OperatorExpr::generator(Gen::A), ell);
    auto rhs = OperatorExpr::power(OperatorExpr::generator(Gen::ADag), ell);
    for (auto _ : state) {
        benchmark::DoNotOptimize(commutator(lhs, rhs));
    }
}
BENCHMARK(BM_NormalOrderCommutator)->Arg(2)->Arg(5)->Arg(10)->Arg(15);

void BM_PbwProduct(benchmark::State& state) {
    unsigned deg = unsigned(state.range(0));
    NormalForm x, y;
    for (unsigned j = 0; j <= deg; ++j)
        for (unsigned k = 0; k <= deg; ++k) {
            x += NormalForm::monomial(j, k, Rational(int(j + 2 * k + 1)));
            y += NormalForm::monomial(k, j, Rational(int(2 * j + k + 1), 3));
        }
    for (auto _ : state) {
        benchmark::DoNotOptimize(x * y);
    }
}
BENCHMARK(BM_PbwProduct)->Arg(2)->Arg(4)->Arg(6);

void BM_TruncatedMatrix(benchmark::State& state) {
    auto nf = normal_order(parse("[a^3, ad^3] + 2*ad^2*a^2"));
    std::uint64_t cutoff = std::uint64_t(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(TruncatedMatrix::from_normal_form(nf, cutoff));
    }
}
BENCHMARK(BM_TruncatedMatrix)->Arg(20)->Arg(40)->Arg(80);

void BM_ZetaStateSum(benchmark::State& state) {
    SpectralParams params{Cplx(2), std::uint64_t(state.range(0))};
    for (auto _ : state) {
        benchmark::DoNotOptimize(zeta_via_states(params));
    }
}
BENCHMARK(BM_ZetaStateSum)->Arg(1000)->Arg(10000)->Arg(100000);

void BM_ZetaQuantum(benchmark::State& state) {
    SpectralParams params{Cplx(2), std::uint64_t(state.range(0))};
    for (auto _ : state) {
        benchmark::DoNotOptimize(zeta_quantum(params));
    }
}
BENCHMARK(BM_ZetaQuantum)->Arg(100)->Arg(1000)->Arg(10000);

void BM_EulerProduct(benchmark::State& state) {
    std::uint64_t bound = std::uint64_t(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(euler_product(Cplx(2), bound, 64));
    }
}
BENCHMARK(BM_EulerProduct)->Arg(100)->Arg(1000)->Arg(10000);

void BM_GeometricCreate(benchmark::State& state) {
    std::uint64_t n = std::uint64_t(state.range(0));
    auto e1 = FockVec::basis_state(1, n, Basis::DividedPower);
    for (auto _ : state) {
        benchmark::DoNotOptimize(geometric_create(n, e1, n));
    }
}
BENCHMARK(BM_GeometricCreate)->Arg(100)->Arg(1000)->Arg(10000);

void BM_MomentQuadrature(benchmark::State& state) {
    MomentSpec spec;
    spec.s = Real(int(state.range(0)));
    spec.n_max = 100'000'000;
    spec.method = MomentMethod::Quadrature;
    for (auto _ : state) {
        benchmark::DoNotOptimize(k_moment(spec));
    }
}
BENCHMARK(BM_MomentQuadrature)->Arg(2)->Arg(4);

void BM_GaussSum(benchmark::State& state) {
    std::uint64_t p = std::uint64_t(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(gauss_sum(p));
    }
}
BENCHMARK(BM_GaussSum)->Arg(13)->Arg(101)->Arg(199);

}  // namespace

int main(int argc, char** argv) {
    set_precision_bits(128);  // match the CLI default
    benchmark::Initialize(&argc, argv);
    if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
    benchmark::RunSpecifiedBenchmarks();
    benchmark::Shutdown();
    return 0;
}
