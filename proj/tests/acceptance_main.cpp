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

// Acceptance suite: one criterion per check, one pass/fail line each, with
// every tolerance pinned in code. Exits nonzero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hyperent/entropy.hpp"
#include "hyperent/state.hpp"
#include "hyperent/verification.hpp"
#include "hyperent/weight.hpp"
#include "subprocess.hpp"

using hyperent::EdgeMask;
using hyperent::EntropicProfile;
using hyperent::Hypergraph;
using hyperent::Rational;
using hyperent::SignVector;

namespace {

struct Failure {
    std::string message;
};

void require(bool ok, const std::string& message) {
    if (!ok) {
        throw Failure{message};
    }
}

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

Hypergraph load_fixture(const std::string& name) {
    const std::string path = subprocess::fixture(name);
    std::ifstream in(path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (buffer.str().empty()) {
        throw Failure{"could not read fixture " + path};
    }
    return Hypergraph::from_json_text(buffer.str());
}

int failures = 0;

void criterion(int id, const std::string& title, const std::function<void()>& body) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
        body();
    } catch (const Failure& f) {
        ok = false;
        detail = f.message;
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("unexpected exception: ") + e.what();
    }
    const double elapsed = ms_since(start);
    std::printf("[%s] criterion %2d: %s (%.1f ms)%s%s\n", ok ? "PASS" : "FAIL", id, title.c_str(),
                elapsed, ok ? "" : "; ", detail.c_str());
    std::fflush(stdout);
    if (!ok) {
        ++failures;
    }
}

// Criteria 5-7 share one sampled population: the full n = 3 census plus 1000
// seeded random hypergraphs with 4 <= n <= 10 and at most 12 edges.
std::vector<Hypergraph> sampled_population() {
    std::vector<Hypergraph> population;
    population.reserve(256 + 1000);
    for (std::uint64_t mask = 0; mask < 256; ++mask) {
        population.push_back(Hypergraph::from_edge_set_mask(3, mask));
    }
    std::mt19937_64 rng(20260810);
    for (int i = 0; i < 1000; ++i) {
        const int n = 4 + static_cast<int>(rng() % 7);
        population.push_back(hyperent::random_hypergraph(rng, n, 12));
    }
    return population;
}

void criterion_1() {
    const Hypergraph g4 = load_fixture("fig1d.json");
    // Warm-up outside the timed window.
    (void)hyperent::hw_bruteforce(g4);
    (void)hyperent::hw_inclusion_exclusion(g4);

    auto start = std::chrono::steady_clock::now();
    const std::uint64_t via_tt = hyperent::hw_bruteforce(g4);
    const double tt_ms = ms_since(start);

    start = std::chrono::steady_clock::now();
    const std::uint64_t via_ie = hyperent::hw_inclusion_exclusion(g4);
    const double ie_ms = ms_since(start);

    require(via_tt == 6, "truth-table weight is " + std::to_string(via_tt) + ", expected 6");
    require(via_ie == 6,
            "inclusion-exclusion weight is " + std::to_string(via_ie) + ", expected 6");
    require(tt_ms < 1.0, "truth-table route took " + std::to_string(tt_ms) + " ms (>= 1 ms)");
    require(ie_ms < 1.0,
            "inclusion-exclusion route took " + std::to_string(ie_ms) + " ms (>= 1 ms)");
}

void criterion_2() {
    const auto start = std::chrono::steady_clock::now();
    const Hypergraph g = load_fixture("fig1a.json");
    const Rational combinatorial = hyperent::entropic_measure(g, 4);
    const Rational oracle_det =
        hyperent::reduced_density(hyperent::build_state(g), 4).determinant();
    const double elapsed = ms_since(start);
    require(combinatorial == Rational(3, 16),
            "combinatorial measure is " + combinatorial.to_string() + ", expected 3/16");
    require(oracle_det == Rational(3, 16),
            "state-vector determinant is " + oracle_det.to_string() + ", expected 3/16");
    require(elapsed < 10.0, "took " + std::to_string(elapsed) + " ms (>= 10 ms)");
}

void criterion_3() {
    const Hypergraph g = load_fixture("fig1b.json");
    const Hypergraph adjacent = g.t_adjacent(4);
    const Rational measure = hyperent::entropic_measure(g, 4);
    const std::uint64_t adjacent_hw = hyperent::hw_bruteforce(adjacent);
    require(measure == Rational(1, 4), "measure is " + measure.to_string() + ", expected 1/4");
    require(adjacent.rank() == 2,
            "adjacent rank is " + std::to_string(adjacent.rank()) + ", expected 2");
    require(adjacent_hw == 4, "adjacent weight is " + std::to_string(adjacent_hw) +
                                  ", expected 4");
}

void criterion_4() {
    for (const char* name : {"fig1c.json", "lme_triples4.json"}) {
        const Hypergraph g = load_fixture(name);
        const EntropicProfile profile = hyperent::entropic_profile(g);
        for (int t = 1; t <= 4; ++t) {
            require(profile.measures[t - 1] == Rational(1, 4),
                    std::string(name) + " measure at vertex " + std::to_string(t) + " is " +
                        profile.measures[t - 1].to_string() + ", expected 1/4");
        }
        require(hyperent::is_locally_maximally_entangled(g),
                std::string(name) + " not flagged locally maximally entangled");
    }
}

void criterion_5() {
    const auto start = std::chrono::steady_clock::now();
    for (const Hypergraph& g : sampled_population()) {
        const std::uint64_t via_tt = hyperent::hw_bruteforce(g);
        const std::uint64_t via_ie = hyperent::hw_inclusion_exclusion(g);
        require(via_tt == via_ie, "weight routes disagree on " + g.to_compact() + ": " +
                                      std::to_string(via_tt) + " vs " + std::to_string(via_ie));
    }
    const double elapsed = ms_since(start);
    require(elapsed < 30000.0, "took " + std::to_string(elapsed) + " ms (>= 30 s)");
}

void criterion_6() {
    for (const Hypergraph& g : sampled_population()) {
        const bool odd = hyperent::hw_bruteforce(g) % 2 == 1;
        require(odd == g.contains_full_edge(),
                "parity law fails on " + g.to_compact());
    }
}

void criterion_7() {
    std::uint64_t covered = 0;
    for (const Hypergraph& g : sampled_population()) {
        if (!g.contains_full_edge()) {
            continue;
        }
        ++covered;
        require(hyperent::hw_full_edge_recurrence(g) == hyperent::hw_bruteforce(g),
                "recurrence fails on " + g.to_compact());
    }
    // Force full-edge membership so the premise is exercised at every n.
    std::mt19937_64 rng(424242);
    for (int i = 0; i < 200; ++i) {
        const int n = 1 + static_cast<int>(rng() % 10);
        Hypergraph g = hyperent::random_hypergraph(rng, n, 10);
        if (!g.contains_full_edge()) {
            g = g.toggled(hyperent::full_edge(n));
        }
        ++covered;
        require(hyperent::hw_full_edge_recurrence(g) == hyperent::hw_bruteforce(g),
                "recurrence fails on " + g.to_compact());
    }
    require(covered >= 300, "only " + std::to_string(covered) + " full-edge cases covered");
}

void criterion_8() {
    for (int n = 1; n <= 4; ++n) {
        // Every subset of {empty edge, loops}: the full rank <= 1 census.
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n + 1)); ++mask) {
            std::vector<EdgeMask> edges;
            for (int j = 0; j <= n; ++j) {
                if ((mask >> j) & 1) {
                    edges.push_back(j == 0 ? EdgeMask{0} : (EdgeMask{1} << (j - 1)));
                }
            }
            const Hypergraph g(n, std::move(edges));
            const std::uint64_t hw = hyperent::hw_bruteforce(g);
            const std::uint64_t all = std::uint64_t{1} << n;
            if (g.rank() == 0) {
                require(hw == 0 || hw == all,
                        "rank-0 weight not extreme on " + g.to_compact());
            } else {
                require(g.rank() == 1, "census leaked rank > 1");
                require(hw == all / 2, "rank-1 weight is " + std::to_string(hw) +
                                           " on " + g.to_compact() + ", expected " +
                                           std::to_string(all / 2));
                require(hw != 0 && hw != all,
                        "converse fails: extreme weight at rank 1 on " + g.to_compact());
            }
        }
    }
    // Converse across the unrestricted n <= 3 census: extreme weight forces
    // rank 0.
    for (std::uint64_t mask = 0; mask < 256; ++mask) {
        const Hypergraph g = Hypergraph::from_edge_set_mask(3, mask);
        const std::uint64_t hw = hyperent::hw_bruteforce(g);
        if (hw == 0 || hw == 8) {
            require(g.rank() == 0, "extreme weight without rank 0 on " + g.to_compact());
        }
    }
}

void criterion_9() {
    const auto start = std::chrono::steady_clock::now();
    for (int n = 1; n <= 4; ++n) {
        const std::uint64_t sets = std::uint64_t{1} << (std::uint64_t{1} << n);
        for (std::uint64_t mask = 0; mask < sets; ++mask) {
            const Hypergraph g = Hypergraph::from_edge_set_mask(n, mask);
            for (int t = 1; t <= n; ++t) {
                const Hypergraph adjacent = g.t_adjacent(t);
                const int adjacent_rank = adjacent.rank();
                const Rational measure = hyperent::entropic_measure(g, t);
                require((measure == Rational(0)) == (adjacent_rank == 0),
                        "zero law fails on " + g.to_compact() + " vertex " + std::to_string(t));
                if (adjacent_rank == 1) {
                    require(measure == Rational(1, 4),
                            "rank-1 maximum fails on " + g.to_compact() + " vertex " +
                                std::to_string(t));
                }
                if (adjacent_rank == n - 1 && adjacent_rank >= 2) {
                    require(Rational(0) < measure && measure < Rational(1, 4),
                            "strict interior fails on " + g.to_compact() + " vertex " +
                                std::to_string(t));
                }
            }
        }
    }
    const double elapsed = ms_since(start);
    require(elapsed < 120000.0, "took " + std::to_string(elapsed) + " ms (>= 2 min)");
}

void criterion_10() {
    std::vector<EntropicProfile> full_rank;
    std::vector<EntropicProfile> low_rank;
    std::vector<std::string> full_names;
    std::vector<std::string> low_names;
    for (std::uint64_t mask = 0; mask < 256; ++mask) {
        const Hypergraph g = Hypergraph::from_edge_set_mask(3, mask);
        if (g.rank() == 3) {
            full_rank.push_back(hyperent::entropic_profile(g));
            full_names.push_back(g.to_compact());
        } else {
            low_rank.push_back(hyperent::entropic_profile(g));
            low_names.push_back(g.to_compact());
        }
    }
    require(full_rank.size() == 128 && low_rank.size() == 128, "census split is off");
    for (std::size_t i = 0; i < full_rank.size(); ++i) {
        for (std::size_t j = 0; j < low_rank.size(); ++j) {
            for (int t = 0; t < 3; ++t) {
                require(full_rank[i].measures[t] != low_rank[j].measures[t],
                        "profiles collide at vertex " + std::to_string(t + 1) + " for " +
                            full_names[i] + " vs " + low_names[j]);
            }
        }
    }
}

void criterion_11() {
    const std::vector<std::pair<std::string, std::string>> pairs = {
        {"graph_triangle3.json", "full_edge3.json"},
        {"graph_triangle3.json", "full_edge3_extra.json"},
        {"graph_path3.json", "full_edge3.json"},
        {"graph_path3.json", "full_edge3_extra.json"},
        {"fig1c.json", "full_edge4.json"},
        {"fig1c.json", "full_edge4_extra.json"},
        {"graph_cycle4.json", "full_edge4.json"},
        {"graph_cycle4.json", "full_edge4_extra.json"},
        {"graph_cycle5.json", "full_edge5.json"},
        {"graph_cycle5.json", "full_edge5_extra.json"},
        {"graph_complete5.json", "full_edge5.json"},
        {"graph_complete5.json", "full_edge5_extra.json"},
    };
    for (const auto& [graph_fixture, full_fixture] : pairs) {
        const auto result = subprocess::run_cli("witness " + subprocess::fixture(graph_fixture) +
                                                " " + subprocess::fixture(full_fixture));
        require(result.exit_code == 0, "witness exited " + std::to_string(result.exit_code) +
                                           " for " + graph_fixture + " vs " + full_fixture);
        require(result.output.find("parity-certificate") != std::string::npos,
                "no parity certificate for " + graph_fixture + " vs " + full_fixture);
    }
}

void criterion_12() {
    std::mt19937_64 rng(987654321);
    int covered = 0;
    while (covered < 100) {
        const int n = 1 + static_cast<int>(rng() % 8);
        const Hypergraph g = hyperent::random_hypergraph(rng, n, 10);
        const hyperent::AmplitudeVector before =
            hyperent::to_amplitudes(hyperent::build_state(g));
        hyperent::AmplitudeVector after = before;
        for (int t = 1; t <= n; ++t) {
            after = hyperent::apply_local_unitary(after, t, hyperent::random_local_unitary(rng));
        }
        for (int t = 1; t <= n; ++t) {
            const double det_before = hyperent::reduced_density_float(before, t).det().real();
            const double det_after = hyperent::reduced_density_float(after, t).det().real();
            require(std::abs(det_before - det_after) <= 1e-9,
                    "determinant drifted by " + std::to_string(std::abs(det_before - det_after)) +
                        " on " + g.to_compact() + " qubit " + std::to_string(t));
            const double exact = hyperent::entropic_measure(g, t).to_double();
            require(std::abs(det_before - exact) <= 1e-10,
                    "float determinant off the exact measure by " +
                        std::to_string(std::abs(det_before - exact)) + " on " + g.to_compact() +
                        " qubit " + std::to_string(t));
        }
        ++covered;
    }
}

}  // namespace

int main() {
    criterion(1, "bundled fig1d weight is 6 via both routes, each under 1 ms", criterion_1);
    criterion(2, "fig1a vertex-4 measure 3/16 by both routes, under 10 ms", criterion_2);
    criterion(3, "fig1b: measure 1/4 at rank-2 adjacent subhypergraph of weight 4", criterion_3);
    criterion(4, "fig1c and the all-triples hypergraph have all-1/4 profiles", criterion_4);
    criterion(5, "weight routes agree: full n=3 census plus 1000 random cases, under 30 s",
              criterion_5);
    criterion(6, "odd weight exactly at full-edge membership across the same population",
              criterion_6);
    criterion(7, "full-edge recurrence holds for every sampled full-edge hypergraph",
              criterion_7);
    criterion(8, "rank 0 <=> extreme weight, rank 1 => half weight, full census n <= 4",
              criterion_8);
    criterion(9, "per-vertex measure laws over the full census n <= 4, under 2 min", criterion_9);
    criterion(10, "full-rank vs lower-rank profiles differ at every vertex on n = 3",
              criterion_10);
    criterion(11, "CLI witness issues parity certificates for graph vs full-edge fixtures",
              criterion_11);
    criterion(12, "local-unitary invariance of float determinants, 100 seeded pairs",
              criterion_12);

    if (failures == 0) {
        std::printf("acceptance: 12/12 criteria passed\n");
    } else {
        std::printf("acceptance: %d of 12 criteria FAILED\n", failures);
    }
    return failures == 0 ? 0 : 1;
}
