// Compares the OpenMP-parallel node kernels against the serial reference path.
// The two paths share buffers and a fixed pairwise reduction, so they must
// agree byte-for-byte; this target measures the speedup only.

#include <benchmark/benchmark.h>

#include "lagsphere/identities.hpp"
#include "lagsphere/immersions.hpp"
#include "lagsphere/integrals.hpp"

using namespace lagsphere;

namespace {

const Params prm(4.0, 1.0);

void bm_integrate(benchmark::State& state, Exec mode) {
    const PhiFamilyMap smap(prm, 0.3, Chart::Sphere);
    const auto grid = QuadratureGrid::make(static_cast<int>(state.range(0)),
                                           static_cast<int>(state.range(0)) * 5 / 4);
    std::vector<Density> dens;
    dens.push_back([](double, double, const LocalGeometry& lg) { return lg.H2 + 1.25; });
    dens.push_back([](double, double, const LocalGeometry& lg) { return lg.C; });
    for (auto _ : state) {
        auto v = integrate_many(prm, smap, dens, grid, mode);
        benchmark::DoNotOptimize(v);
    }
    state.SetItemsProcessed(state.iterations() * grid.nodes());
}

void bm_exact_suite(benchmark::State& state, Exec mode) {
    const SamplePlan plan{static_cast<int>(state.range(0)), 7, 0.0};
    for (auto _ : state) {
        auto v = run_exact_suite(prm, 0.0, plan, 1e-3, mode);
        benchmark::DoNotOptimize(v);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK_CAPTURE(bm_integrate, serial, Exec::Serial)->Arg(96)->Arg(160)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_integrate, openmp, Exec::Parallel)->Arg(96)->Arg(160)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_exact_suite, serial, Exec::Serial)->Arg(500)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_exact_suite, openmp, Exec::Parallel)->Arg(500)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
