// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "jsl/linear_process.hpp"
#include "jsl/special_functions.hpp"

using namespace jsl;

namespace {

void BM_BesselI1Series(benchmark::State& state) {
    double z = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(bessel_i1_scaled(z));
        z = z < 29.0 ? z + 0.37 : 0.1;
    }
}

void BM_BesselI1Asymptotic(benchmark::State& state) {
    double z = 31.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(bessel_i1_scaled(z));
        z = z < 500.0 ? z + 3.1 : 31.0;
    }
}

void BM_SechPow(benchmark::State& state) {
    double x = -20.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sech_pow(x, 2.5));
        x = x < 20.0 ? x + 0.01 : -20.0;
    }
}

void BM_LinearDensity(benchmark::State& state) {
    double x = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(linear_density(x, 5.0, 2.0));
        x = x < 30.0 ? x + 0.05 : 0.0;
    }
}

}  // namespace

BENCHMARK(BM_BesselI1Series);
BENCHMARK(BM_BesselI1Asymptotic);
BENCHMARK(BM_SechPow);
BENCHMARK(BM_LinearDensity);

BENCHMARK_MAIN();
