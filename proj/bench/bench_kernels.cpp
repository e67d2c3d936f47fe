// Copyright 2026 The catmap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "catmap/hecke.hpp"
#include "catmap/propagator.hpp"
#include "catmap/weyl.hpp"

using namespace catmap;

namespace {

const ThetaMatrix &sample() {
    static const ThetaMatrix a = random_theta(7, 10);
    return a;
}

void BM_multiply_serial(benchmark::State &state) {
    const HilbertDim n(state.range(0));
    const ComplexMatrix u = build(sample(), n);
    for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::multiply(u, u));
}

void BM_multiply_parallel(benchmark::State &state) {
    const HilbertDim n(state.range(0));
    const ComplexMatrix u = build(sample(), n);
    for (auto _ : state) benchmark::DoNotOptimize(kernels::parallel::multiply(u, u));
}

void BM_build_serial(benchmark::State &state) {
    const HilbertDim n(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(build_serial(sample(), n));
}

void BM_build_parallel(benchmark::State &state) {
    const HilbertDim n(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(build(sample(), n));
}

void BM_commutant_serial(benchmark::State &state) {
    const HilbertDim n(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(commutant_mod_serial(sample(), n));
}

void BM_commutant_parallel(benchmark::State &state) {
    const HilbertDim n(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(commutant_mod(sample(), n));
}

void BM_egorov_all_modes(benchmark::State &state) {
    const HilbertDim n(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(verify_egorov_all_modes(sample(), n));
}

}  // namespace

BENCHMARK(BM_multiply_serial)->RangeMultiplier(2)->Range(16, 256);
BENCHMARK(BM_multiply_parallel)->RangeMultiplier(2)->Range(16, 256);
BENCHMARK(BM_build_serial)->RangeMultiplier(2)->Range(16, 512);
BENCHMARK(BM_build_parallel)->RangeMultiplier(2)->Range(16, 512);
BENCHMARK(BM_commutant_serial)->DenseRange(2, 8, 2);
BENCHMARK(BM_commutant_parallel)->DenseRange(2, 8, 2);
BENCHMARK(BM_egorov_all_modes)->DenseRange(4, 16, 4);

BENCHMARK_MAIN();
