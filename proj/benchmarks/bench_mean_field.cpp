// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "jsl/mean_field.hpp"
#include "jsl/soliton.hpp"

using namespace jsl;

namespace {

DensityGrid profile_grid(double dx) {
    DensityGrid grid = DensityGrid::make(-25.0, 25.0, dx);
    grid.fill([](double x) { return soliton_density(x, 2.0); });
    return grid;
}

void BM_MeanFieldStep(benchmark::State& state) {
    DensityGrid grid = profile_grid(50.0 / static_cast<double>(state.range(0)));
    const ModelParams params = ModelParams::soliton(2.0);
    for (auto _ : state) benchmark::DoNotOptimize(step(grid, params, 0.01));
    state.SetComplexityN(state.range(0));
}

void BM_ComputeOmega(benchmark::State& state) {
    const DensityGrid grid = profile_grid(50.0 / static_cast<double>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(compute_omega(grid, 0.5, 0.0));
    state.SetComplexityN(state.range(0));
}

void BM_GainTerm(benchmark::State& state) {
    const DensityGrid grid = profile_grid(50.0 / static_cast<double>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(gain_term(grid, grid.values, 2.0));
    state.SetComplexityN(state.range(0));
}

}  // namespace

BENCHMARK(BM_MeanFieldStep)->Arg(1000)->Arg(2500)->Arg(10000)->Unit(benchmark::kMicrosecond)->Complexity();
BENCHMARK(BM_ComputeOmega)->Arg(1000)->Arg(10000)->Unit(benchmark::kMicrosecond)->Complexity();
BENCHMARK(BM_GainTerm)->Arg(1000)->Arg(10000)->Unit(benchmark::kMicrosecond)->Complexity();
