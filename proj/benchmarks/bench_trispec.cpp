#include "trispec/ffunc.hpp"
#include "trispec/models.hpp"
#include "trispec/oracle.hpp"
#include "trispec/spectrum.hpp"

#include <benchmark/benchmark.h>

using namespace trispec;

static void BM_EvalF(benchmark::State& state) {
    const auto rec = parity_rabi_recurrence({0.7, 0.4, 1.0, Parity::Plus});
    const double x = static_cast<double>(state.range(0)) + 0.37;
    for (auto _ : state) {
        benchmark::DoNotOptimize(eval_F_euler(rec, x));
    }
}
BENCHMARK(BM_EvalF)->Arg(0)->Arg(5)->Arg(50);

static void BM_ContinuedFraction(benchmark::State& state) {
    const auto rec = parity_rabi_recurrence({0.7, 0.4, 1.0, Parity::Plus});
    for (auto _ : state) {
        benchmark::DoNotOptimize(eval_r0_cf(rec, 0.37));
    }
}
BENCHMARK(BM_ContinuedFraction);

static void BM_Scan(benchmark::State& state) {
    const auto rec = dho_recurrence({0.7});
    const int points = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(scan(rec, -1.0, 6.0, points));
    }
    state.SetItemsProcessed(state.iterations() * points);
}
BENCHMARK(BM_Scan)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);

static void BM_ResolveSpectrum(benchmark::State& state) {
    const ModelParams params{.kappa = 0.7, .delta = 0.4};
    for (auto _ : state) {
        benchmark::DoNotOptimize(resolve_spectrum(ModelKind::RabiParity, params, {-1.0, 4.0, 4000}));
    }
}
BENCHMARK(BM_ResolveSpectrum)->Unit(benchmark::kMillisecond);

static void BM_EigenLowest(benchmark::State& state) {
    const auto h = build_hamiltonian(ModelKind::Rabi, {.kappa = 0.7, .delta = 0.4}, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(eigen_lowest(h, 10, 1e-10));
    }
}
BENCHMARK(BM_EigenLowest)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
