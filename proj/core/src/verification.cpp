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

#include "hyperent/verification.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "hyperent/entropy.hpp"
#include "hyperent/state.hpp"
#include "hyperent/weight.hpp"

namespace hyperent {

Hypergraph random_hypergraph(std::mt19937_64& rng, int vertex_count, int max_edges) {
    const int edge_target = static_cast<int>(rng() % static_cast<std::uint64_t>(max_edges + 1));
    std::vector<EdgeMask> edges;
    edges.reserve(edge_target);
    const std::uint64_t candidates = std::uint64_t{1} << vertex_count;
    for (int i = 0; i < edge_target; ++i) {
        edges.push_back(static_cast<EdgeMask>(rng() % candidates));
    }
    return Hypergraph(vertex_count, std::move(edges));
}

namespace {

class Suite {
  public:
    explicit Suite(std::string name) { result_.name = std::move(name); }

    void check(bool ok, const std::function<std::string()>& detail) {
        ++result_.checks;
        if (!ok) {
            ++result_.failures;
            if (result_.first_failure.empty()) {
                result_.first_failure = detail();
            }
        }
    }

    SuiteResult take() { return std::move(result_); }

  private:
    SuiteResult result_;
};

void for_each_small_hypergraph(int max_n, const std::function<void(const Hypergraph&)>& fn) {
    for (int n = 1; n <= max_n; ++n) {
        const std::uint64_t sets = std::uint64_t{1} << (std::uint64_t{1} << n);
        for (std::uint64_t mask = 0; mask < sets; ++mask) {
            fn(Hypergraph::from_edge_set_mask(n, mask));
        }
    }
}

int random_n(std::mt19937_64& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

SuiteResult suite_oracle_equivalence(const VerifyOptions& options) {
    Suite suite("weight-oracle-equivalence");
    auto compare = [&](const Hypergraph& g) {
        const std::uint64_t tt = hw_bruteforce(g);
        const std::uint64_t ie = hw_inclusion_exclusion(g);
        suite.check(tt == ie, [&] {
            return "hw mismatch on " + g.to_compact() + ": truth-table " + std::to_string(tt) +
                   " vs inclusion-exclusion " + std::to_string(ie);
        });
    };
    for_each_small_hypergraph(3, compare);
    if (options.max_n >= 4) {
        std::mt19937_64 rng(options.seed);
        for (int i = 0; i < 1000; ++i) {
            compare(random_hypergraph(rng, random_n(rng, 4, options.max_n), 12));
        }
    }
    return suite.take();
}

SuiteResult suite_parity(const VerifyOptions& options) {
    Suite suite("weight-parity");
    auto compare = [&](const Hypergraph& g) {
        const bool odd = hw_bruteforce(g) % 2 == 1;
        suite.check(odd == hw_is_odd(g), [&] {
            return "parity mismatch on " + g.to_compact() + ": weight is " +
                   (odd ? "odd" : "even") + " but the full edge is " +
                   (g.contains_full_edge() ? "present" : "absent");
        });
    };
    for_each_small_hypergraph(3, compare);
    if (options.max_n >= 4) {
        std::mt19937_64 rng(options.seed + 1);
        for (int i = 0; i < 1000; ++i) {
            compare(random_hypergraph(rng, random_n(rng, 4, options.max_n), 12));
        }
    }
    return suite.take();
}

SuiteResult suite_full_edge_recurrence(const VerifyOptions& options) {
    Suite suite("weight-full-edge-recurrence");
    auto compare = [&](const Hypergraph& g) {
        if (!g.contains_full_edge()) {
            return;
        }
        const std::uint64_t via_recurrence = hw_full_edge_recurrence(g);
        const std::uint64_t reference = hw_bruteforce(g);
        suite.check(via_recurrence == reference, [&] {
            return "recurrence mismatch on " + g.to_compact() + ": " +
                   std::to_string(via_recurrence) + " vs " + std::to_string(reference);
        });
    };
    for_each_small_hypergraph(3, compare);
    if (options.max_n >= 4) {
        std::mt19937_64 rng(options.seed + 2);
        for (int i = 0; i < 500; ++i) {
            const int n = random_n(rng, 4, options.max_n);
            Hypergraph g = random_hypergraph(rng, n, 10);
            if (!g.contains_full_edge()) {
                g = g.toggled(full_edge(n));
            }
            compare(g);
        }
    }
    return suite.take();
}

SuiteResult suite_rank_bounds(const VerifyOptions&) {
    Suite suite("weight-rank-bounds");
    // Every hypergraph on up to 3 vertices: the rank-implied set contains the
    // weight, and weight in {0, 2^n} happens only at rank 0.
    for_each_small_hypergraph(3, [&](const Hypergraph& g) {
        const std::uint64_t hw = hw_bruteforce(g);
        const WeightConstraint constraint = rank_weight_bounds(g);
        suite.check(constraint.permits(hw), [&] {
            return "rank bound violated on " + g.to_compact() + " with hw " + std::to_string(hw);
        });
        const std::uint64_t full = std::uint64_t{1} << g.vertex_count();
        suite.check((hw == 0 || hw == full) == (g.rank() == 0), [&] {
            return "extreme weight without rank 0 on " + g.to_compact();
        });
    });
    // All rank <= 1 hypergraphs on 4 vertices: subsets of {∅, loops}.
    for (std::uint64_t mask = 0; mask < (1u << 5); ++mask) {
        std::vector<EdgeMask> edges;
        for (int j = 0; j < 5; ++j) {
            if ((mask >> j) & 1) {
                edges.push_back(j == 0 ? EdgeMask{0} : (EdgeMask{1} << (j - 1)));
            }
        }
        const Hypergraph g(4, std::move(edges));
        const std::uint64_t hw = hw_bruteforce(g);
        suite.check(rank_weight_bounds(g).permits(hw), [&] {
            return "rank bound violated on " + g.to_compact() + " with hw " + std::to_string(hw);
        });
    }
    return suite.take();
}

SuiteResult suite_complement_flip(const VerifyOptions& options) {
    Suite suite("weight-complement-flip");
    auto compare = [&](const Hypergraph& g) {
        const std::uint64_t hw = hw_bruteforce(g);
        const std::uint64_t flipped = hw_bruteforce(g.toggled(0));
        const std::uint64_t full = std::uint64_t{1} << g.vertex_count();
        suite.check(flipped == full - hw, [&] {
            return "empty-edge toggle did not complement the weight on " + g.to_compact();
        });
    };
    for_each_small_hypergraph(3, compare);
    std::mt19937_64 rng(options.seed + 3);
    for (int i = 0; i < 300; ++i) {
        compare(random_hypergraph(rng, random_n(rng, 1, std::max(1, options.max_n)), 10));
    }
    return suite.take();
}

SuiteResult suite_roundtrip(const VerifyOptions& options) {
    Suite suite("hypergraph-roundtrip");
    std::mt19937_64 rng(options.seed + 4);
    for (int i = 0; i < 300; ++i) {
        const Hypergraph g =
            random_hypergraph(rng, random_n(rng, 1, std::max(1, options.max_n)), 12);
        suite.check(Hypergraph::parse(g.to_compact()) == g,
                    [&] { return "compact round-trip failed on " + g.to_compact(); });
        suite.check(Hypergraph::from_json_text(g.to_json_text()) == g,
                    [&] { return "JSON round-trip failed on " + g.to_compact(); });
    }
    return suite.take();
}

SuiteResult suite_gate_order(const VerifyOptions& options) {
    Suite suite("state-gate-order");
    std::mt19937_64 rng(options.seed + 5);
    const int hi = std::min(options.max_n, 10);
    for (int i = 0; i < 200; ++i) {
        const int n = random_n(rng, 1, std::max(1, hi));
        const Hypergraph g = random_hypergraph(rng, n, 8);
        std::vector<EdgeMask> shuffled = g.edges();
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        SignVector sv = SignVector::all_plus(n);
        for (EdgeMask e : shuffled) {
            sv = apply_hyperedge_gate(sv, e);
        }
        suite.check(sv == build_state(g),
                    [&] { return "gate order changed the state on " + g.to_compact(); });
    }
    return suite.take();
}

SuiteResult suite_cross_route(const VerifyOptions& options) {
    Suite suite("entropy-cross-route");
    auto compare = [&](const Hypergraph& g) {
        const SignVector sv = build_state(g);
        for (int t = 1; t <= g.vertex_count(); ++t) {
            const Rational combinatorial = entropic_measure(g, t);
            const Rational oracle = reduced_density(sv, t).determinant();
            suite.check(combinatorial == oracle, [&] {
                return "measure mismatch on " + g.to_compact() + " at vertex " +
                       std::to_string(t) + ": " + combinatorial.to_string() + " vs " +
                       oracle.to_string();
            });
        }
    };
    for_each_small_hypergraph(3, compare);
    std::mt19937_64 rng(options.seed + 6);
    for (int i = 0; i < 300; ++i) {
        compare(random_hypergraph(rng, random_n(rng, 1, std::max(1, options.max_n)), 10));
    }
    return suite.take();
}

SuiteResult suite_vertex_classification(const VerifyOptions&) {
    Suite suite("entropy-vertex-classification");
    for_each_small_hypergraph(3, [&](const Hypergraph& g) {
        for (int t = 1; t <= g.vertex_count(); ++t) {
            // classify_vertex enforces the rank-implied constraint itself;
            // re-derive the two-way zero law on top.
            const VertexClassification c = classify_vertex(g, t);
            const bool zero_measure = c.measure == Rational(0);
            suite.check(zero_measure == (c.adjacent_rank == 0), [&] {
                return "zero-measure law failed on " + g.to_compact() + " at vertex " +
                       std::to_string(t);
            });
        }
    });
    return suite.take();
}

SuiteResult suite_full_rank_separation(const VerifyOptions&) {
    Suite suite("entropy-full-rank-separation");
    // On 3 vertices: every full-rank hypergraph differs from every rank <= 2
    // hypergraph in every profile entry.
    std::vector<EntropicProfile> full_rank;
    std::vector<EntropicProfile> low_rank;
    const std::uint64_t sets = std::uint64_t{1} << 8;
    for (std::uint64_t mask = 0; mask < sets; ++mask) {
        const Hypergraph g = Hypergraph::from_edge_set_mask(3, mask);
        (g.rank() == 3 ? full_rank : low_rank).push_back(entropic_profile(g));
    }
    for (const auto& fp : full_rank) {
        for (const auto& lp : low_rank) {
            for (int t = 0; t < 3; ++t) {
                suite.check(fp.measures[t] != lp.measures[t], [&] {
                    return "full-rank profile collided with a low-rank profile at vertex " +
                           std::to_string(t + 1);
                });
            }
        }
    }
    return suite.take();
}

SuiteResult suite_lu_invariance(const VerifyOptions& options) {
    Suite suite("state-lu-invariance");
    std::mt19937_64 rng(options.seed + 7);
    const int hi = std::max(1, std::min(options.max_n, 8));
    for (int i = 0; i < 50; ++i) {
        const int n = random_n(rng, 1, hi);
        const Hypergraph g = random_hypergraph(rng, n, 8);
        const AmplitudeVector before = to_amplitudes(build_state(g));
        AmplitudeVector after = before;
        for (int t = 1; t <= n; ++t) {
            after = apply_local_unitary(after, t, random_local_unitary(rng));
        }
        for (int t = 1; t <= n; ++t) {
            const double det_before = reduced_density_float(before, t).det().real();
            const double det_after = reduced_density_float(after, t).det().real();
            suite.check(std::abs(det_before - det_after) <= 1e-9, [&] {
                return "determinant drifted under local unitaries on " + g.to_compact() +
                       " at qubit " + std::to_string(t);
            });
            const double exact = entropic_measure(g, t).to_double();
            suite.check(std::abs(det_before - exact) <= 1e-10, [&] {
                return "float determinant disagrees with the exact measure on " + g.to_compact() +
                       " at qubit " + std::to_string(t);
            });
        }
    }
    return suite.take();
}

}  // namespace

std::vector<SuiteResult> run_self_verification(const VerifyOptions& options) {
    return {
        suite_oracle_equivalence(options),
        suite_parity(options),
        suite_full_edge_recurrence(options),
        suite_rank_bounds(options),
        suite_complement_flip(options),
        suite_roundtrip(options),
        suite_gate_order(options),
        suite_cross_route(options),
        suite_vertex_classification(options),
        suite_full_rank_separation(options),
        suite_lu_invariance(options),
    };
}

}  // namespace hyperent
