// Copyright 2026 The Hyperent Authors.
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

#include <benchmark/benchmark.h>

#include "bench_common.hpp"
#include "hyperent/entropy.hpp"
#include "hyperent/state.hpp"

namespace {

void BM_BuildState(benchmark::State& state) {
    const auto g = bench::make_hypergraph(static_cast<int>(state.range(0)), 12);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hyperent::build_state(g));
    }
}
BENCHMARK(BM_BuildState)->Arg(12)->Arg(16)->Arg(20);

void BM_ReducedDensity(benchmark::State& state) {
    const auto g = bench::make_hypergraph(static_cast<int>(state.range(0)), 12);
    const auto sv = hyperent::build_state(g);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hyperent::reduced_density(sv, 1));
    }
}
BENCHMARK(BM_ReducedDensity)->Arg(12)->Arg(16)->Arg(20);

void BM_EntropicProfile(benchmark::State& state) {
    const auto g = bench::make_hypergraph(static_cast<int>(state.range(0)), 12);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hyperent::entropic_profile(g));
    }
}
BENCHMARK(BM_EntropicProfile)->Arg(8)->Arg(12)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
