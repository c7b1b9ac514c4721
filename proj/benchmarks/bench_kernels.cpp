// Serial reference kernels vs their OpenMP counterparts. The two produce
// bit-identical output (asserted by the unit tests); these benchmarks measure
// what the parallel versions buy at various problem sizes.

#include "kirchhoff/corpus.hpp"
#include "kirchhoff/kernels.hpp"
#include "kirchhoff/lifting.hpp"
#include "kirchhoff/resistance.hpp"

#include <benchmark/benchmark.h>

using namespace kirchhoff;

namespace {

/// SPD benchmark matrix: shifted Laplacian of a cycle.
SquareMatrix<double> spd_matrix(int n) {
    SquareMatrix<double> a = laplacian<double>(make_cycle(n));
    const double shift = 1.0 / n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) += shift;
    return a;
}

void bm_factor_serial(benchmark::State& state) {
    const auto a = spd_matrix(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        SquareMatrix<double> w = a;
        ldlt_factor_serial(w);
        benchmark::DoNotOptimize(w.data());
    }
}

void bm_factor_parallel(benchmark::State& state) {
    const auto a = spd_matrix(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        SquareMatrix<double> w = a;
        ldlt_factor_parallel(w);
        benchmark::DoNotOptimize(w.data());
    }
}

void bm_inverse_serial(benchmark::State& state) {
    auto factored = spd_matrix(static_cast<int>(state.range(0)));
    ldlt_factor_serial(factored);
    for (auto _ : state) {
        auto inv = ldlt_inverse_serial(factored);
        benchmark::DoNotOptimize(inv.data());
    }
}

void bm_inverse_parallel(benchmark::State& state) {
    auto factored = spd_matrix(static_cast<int>(state.range(0)));
    ldlt_factor_serial(factored);
    for (auto _ : state) {
        auto inv = ldlt_inverse_parallel(factored);
        benchmark::DoNotOptimize(inv.data());
    }
}

void bm_resistance(benchmark::State& state, Parallelism par) {
    const Graph g = make_cycle(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto omega = resistance_matrix(g, par);
        benchmark::DoNotOptimize(omega.data());
    }
}

void bm_resistance_serial(benchmark::State& state) { bm_resistance(state, Parallelism::Serial); }
void bm_resistance_openmp(benchmark::State& state) { bm_resistance(state, Parallelism::OpenMP); }

void bm_lift(benchmark::State& state, Parallelism par) {
    const Graph g = make_complete(static_cast<int>(state.range(0)));
    const auto omega = resistance_matrix(g);
    for (auto _ : state) {
        auto lifted = lift_subdivision(g, omega, par);
        benchmark::DoNotOptimize(lifted.omega.data());
    }
}

void bm_lift_serial(benchmark::State& state) { bm_lift(state, Parallelism::Serial); }
void bm_lift_openmp(benchmark::State& state) { bm_lift(state, Parallelism::OpenMP); }

}  // namespace

BENCHMARK(bm_factor_serial)->Arg(128)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_factor_parallel)->Arg(128)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_inverse_serial)->Arg(128)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_inverse_parallel)->Arg(128)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_resistance_serial)->Arg(128)->Arg(384)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_resistance_openmp)->Arg(128)->Arg(384)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_lift_serial)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_lift_openmp)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
