// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "jsl/swarm.hpp"

using namespace jsl;

namespace {

Swarm spread_swarm(double n, int particles, int warmup_events) {
    Swarm swarm = Swarm::cold_start(ModelParams{2.0, n, 1.0}, particles, 12345);
    SwarmSimulator sim(std::move(swarm), /*rebuild_every=*/10000);
    for (int i = 0; i < warmup_events; ++i) sim.step();
    return sim.swarm();
}

void BM_NaiveRates(benchmark::State& state) {
    const auto swarm = spread_swarm(0.5, static_cast<int>(state.range(0)), 2000);
    for (auto _ : state)
        benchmark::DoNotOptimize(particle_rates_naive(swarm.positions, swarm.params));
    state.SetComplexityN(state.range(0));
}

void BM_SortedRates(benchmark::State& state) {
    const auto swarm = spread_swarm(0.5, static_cast<int>(state.range(0)), 2000);
    for (auto _ : state)
        benchmark::DoNotOptimize(particle_rates(swarm.positions, swarm.params));
    state.SetComplexityN(state.range(0));
}

// Full event cost of the incremental engine (rates + selection + repair).
void BM_GillespieEventGeneral(benchmark::State& state) {
    Swarm swarm = spread_swarm(0.5, static_cast<int>(state.range(0)), 2000);
    SwarmSimulator sim(std::move(swarm));
    for (auto _ : state) benchmark::DoNotOptimize(sim.step());
    state.SetItemsProcessed(state.iterations());
}

// n = 0: rank weights are static, events cost O(log N + move distance).
void BM_GillespieEventRankPath(benchmark::State& state) {
    Swarm swarm = spread_swarm(0.0, static_cast<int>(state.range(0)), 2000);
    SwarmSimulator sim(std::move(swarm));
    for (auto _ : state) benchmark::DoNotOptimize(sim.step());
    state.SetItemsProcessed(state.iterations());
}

}  // namespace

BENCHMARK(BM_NaiveRates)->Arg(1000)->Arg(4000)->Arg(10000)->Unit(benchmark::kMillisecond)->Complexity();
BENCHMARK(BM_SortedRates)->Arg(1000)->Arg(4000)->Arg(10000)->Unit(benchmark::kMicrosecond)->Complexity();
BENCHMARK(BM_GillespieEventGeneral)->Arg(1000)->Arg(10000)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_GillespieEventRankPath)->Arg(1000)->Arg(10000)->Unit(benchmark::kMicrosecond);
