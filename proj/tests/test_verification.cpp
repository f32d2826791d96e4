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

#include <set>

#include "doctest.h"
#include "hyperent/verification.hpp"

TEST_CASE("self-verification passes and is reproducible") {
    hyperent::VerifyOptions options;
    options.seed = 7;
    options.max_n = 5;
    const auto first = hyperent::run_self_verification(options);
    REQUIRE(!first.empty());

    std::set<std::string> names;
    for (const auto& suite : first) {
        CAPTURE(suite.name);
        CAPTURE(suite.first_failure);
        CHECK(suite.passed());
        CHECK(suite.checks > 0);
        names.insert(suite.name);
    }
    CHECK(names.size() == first.size());
    CHECK(names.count("weight-oracle-equivalence") == 1);
    CHECK(names.count("entropy-cross-route") == 1);
    CHECK(names.count("state-lu-invariance") == 1);

    const auto second = hyperent::run_self_verification(options);
    REQUIRE(second.size() == first.size());
    for (std::size_t i = 0; i < first.size(); ++i) {
        CHECK(second[i].name == first[i].name);
        CHECK(second[i].checks == first[i].checks);
        CHECK(second[i].failures == first[i].failures);
    }
}

TEST_CASE("random hypergraphs respect the requested bounds") {
    std::mt19937_64 rng(1);
    for (int i = 0; i < 200; ++i) {
        const hyperent::Hypergraph g = hyperent::random_hypergraph(rng, 7, 9);
        CHECK(g.vertex_count() == 7);
        CHECK(g.edge_count() <= 9);
    }
}
