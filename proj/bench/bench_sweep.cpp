// Serial reference vs OpenMP kernels for the (n, a) grid sweeps.

#include <benchmark/benchmark.h>

#include <omp.h>

#include "residuum/sweep.hpp"

namespace {

using namespace residuum::sweep;

void BM_VerifySerial(benchmark::State& state) {
    const VerifyGrid grid{static_cast<std::uint64_t>(state.range(0)), 2, 1.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_serial(grid));
    }
}

void BM_VerifyParallel(benchmark::State& state) {
    const VerifyGrid grid{static_cast<std::uint64_t>(state.range(0)), 2, 1.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_parallel(grid, 0));
    }
    state.counters["threads"] = omp_get_max_threads();
}

void BM_CatalogSerial(benchmark::State& state) {
    const CatalogGrid grid{1, static_cast<std::uint64_t>(state.range(0)), 2, 64, 1.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(catalog_serial(grid));
    }
}

void BM_CatalogParallel(benchmark::State& state) {
    const CatalogGrid grid{1, static_cast<std::uint64_t>(state.range(0)), 2, 64, 1.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(catalog_parallel(grid, 0));
    }
    state.counters["threads"] = omp_get_max_threads();
}

}  // namespace

BENCHMARK(BM_VerifySerial)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyParallel)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CatalogSerial)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CatalogParallel)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
