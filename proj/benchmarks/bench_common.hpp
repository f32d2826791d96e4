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

#ifndef HYPERENT_BENCH_COMMON_HPP
#define HYPERENT_BENCH_COMMON_HPP

#include <algorithm>
#include <random>
#include <vector>

#include "hyperent/hypergraph.hpp"

namespace bench {

/// Deterministic hypergraph with exactly edge_count distinct edges.
inline hyperent::Hypergraph make_hypergraph(int n, int edge_count) {
    std::mt19937_64 rng(0xBEEF + 131 * n + edge_count);
    std::vector<hyperent::EdgeMask> edges;
    while (static_cast<int>(edges.size()) < edge_count) {
        const auto e = static_cast<hyperent::EdgeMask>(rng() % (std::uint64_t{1} << n));
        if (std::find(edges.begin(), edges.end(), e) == edges.end()) {
            edges.push_back(e);
        }
    }
    return hyperent::Hypergraph(n, std::move(edges));
}

}  // namespace bench

#endif
