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
#include "hyperent/weight.hpp"

namespace {

void BM_WeightTruthTable(benchmark::State& state) {
    const auto g = bench::make_hypergraph(static_cast<int>(state.range(0)), 12);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hyperent::hw_bruteforce(g));
    }
}
BENCHMARK(BM_WeightTruthTable)->Arg(12)->Arg(16)->Arg(20);

// The subset route is independent of n, so a wide hypergraph shows the pure
// 2^m scaling.
void BM_WeightInclusionExclusion(benchmark::State& state) {
    const auto g = bench::make_hypergraph(32, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(hyperent::hw_inclusion_exclusion(g));
    }
}
BENCHMARK(BM_WeightInclusionExclusion)->Arg(8)->Arg(12)->Arg(16)->Arg(20);

void BM_TruthTableConstruction(benchmark::State& state) {
    const auto g = bench::make_hypergraph(static_cast<int>(state.range(0)), 24);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hyperent::truth_table(g));
    }
}
BENCHMARK(BM_TruthTableConstruction)->Arg(12)->Arg(16)->Arg(20);

}  // namespace
