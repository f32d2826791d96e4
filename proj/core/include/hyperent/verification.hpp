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

#ifndef HYPERENT_VERIFICATION_HPP
#define HYPERENT_VERIFICATION_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hyperent/hypergraph.hpp"

namespace hyperent {

/// Seeded random hypergraph: up to max_edges edges drawn uniformly from the
/// 2^n candidates, then deduplicated. Uses raw engine output (not
/// distributions) so the draw is reproducible across standard libraries.
Hypergraph random_hypergraph(std::mt19937_64& rng, int vertex_count, int max_edges);

struct VerifyOptions {
    std::uint64_t seed = 42;
    /// Largest vertex count for the randomized suites; exhaustive small-n
    /// sweeps always run. Values below 4 skip the randomized weight suites.
    int max_n = 8;
};

struct SuiteResult {
    std::string name;
    std::uint64_t checks = 0;
    std::uint64_t failures = 0;
    /// Reproduction detail for the first failing instance, empty otherwise.
    std::string first_failure;

    bool passed() const { return failures == 0; }
};

/// Runs every cross-module invariant suite: both weight routes agree
/// (exhaustively for n <= 3 and on seeded random cases), parity and
/// full-edge recurrence hold, rank bounds hold, the combinatorial entropic
/// measure equals the state-vector determinant, vertex classifications are
/// consistent, full-rank profiles separate from lower-rank ones at every
/// vertex, serialization round-trips, gate order is irrelevant, and the
/// float-path determinant is invariant under random local unitaries.
std::vector<SuiteResult> run_self_verification(const VerifyOptions& options);

}  // namespace hyperent

#endif
