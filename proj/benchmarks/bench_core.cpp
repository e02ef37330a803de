#include <benchmark/benchmark.h>

#include "hermitewave/core_math.hpp"
#include "hermitewave/propagator.hpp"
#include "hermitewave/semiclassics.hpp"
#include "hermitewave/wavefunction.hpp"

using namespace hermitewave;

static void BM_Psi(benchmark::State& state) {
    const WaveParams p{static_cast<int>(state.range(0)), 1.0, 1.0, 0.5};
    double x = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(psi(p, x, 1.3));
        x += 1e-3;
        if (x > 5.0) x = -5.0;
    }
}
BENCHMARK(BM_Psi)->Arg(2)->Arg(20)->Arg(100);

static void BM_DensityGrid(benchmark::State& state) {
    const WaveParams p{2, 1.0, 1.0, 0.5};
    const GridSpec grid{-8.0, 8.0, 2001, 0.0, 0.0, 1};
    for (auto _ : state) benchmark::DoNotOptimize(density_grid(p, grid, 2.0));
}
BENCHMARK(BM_DensityGrid)->Unit(benchmark::kMicrosecond);

static void BM_Normalization(benchmark::State& state) {
    const WaveParams p{static_cast<int>(state.range(0)), 1.0, 1.0, 0.5};
    for (auto _ : state) benchmark::DoNotOptimize(normalization(p, 2.0));
}
BENCHMARK(BM_Normalization)->Arg(0)->Arg(5)->Arg(20)->Unit(benchmark::kMicrosecond);

static void BM_SpectralPropagate(benchmark::State& state) {
    const SpectralGrid grid(80.0, static_cast<int>(state.range(0)));
    const ComplexField start = initial_field({2, 1.0, 1.0, 0.5}, grid);
    for (auto _ : state) benchmark::DoNotOptimize(spectral_propagate(start, 2.0, 0.5, 1.0));
}
BENCHMARK(BM_SpectralPropagate)->Arg(1024)->Arg(4096)->Arg(16384)->Unit(benchmark::kMicrosecond);

static void BM_FindPeaks(benchmark::State& state) {
    const WaveParams p{static_cast<int>(state.range(0)), 1.0, 1.0, 0.5};
    for (auto _ : state) benchmark::DoNotOptimize(find_peaks(p, 2.0));
}
BENCHMARK(BM_FindPeaks)->Arg(2)->Arg(10)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
