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

#include "hyperent/weight.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "hyperent/errors.hpp"
#include "packed_table.hpp"

namespace hyperent {

TruthTable::TruthTable(int variable_count, std::vector<std::uint64_t> packed_words)
    : n_(variable_count), words_(std::move(packed_words)) {
    if (n_ < 0 || n_ > kMaxStateQubits) {
        throw std::invalid_argument("TruthTable: variable count out of range");
    }
    if (words_.size() != detail::word_count(n_)) {
        throw std::invalid_argument("TruthTable: wrong packed length");
    }
}

bool TruthTable::value(std::uint64_t x) const {
    if (x >= size()) {
        throw std::out_of_range("TruthTable::value: input out of range");
    }
    return (words_[x >> 6] >> (x & 63)) & 1;
}

std::uint64_t TruthTable::ones_count() const {
    std::uint64_t total = 0;
    for (std::uint64_t w : words_) {
        total += static_cast<std::uint64_t>(std::popcount(w));
    }
    return total;
}

TruthTable truth_table(const Hypergraph& g, int max_state_qubits) {
    const int n = g.vertex_count();
    if (n > max_state_qubits) {
        throw InfeasibleError("truth table over " + std::to_string(n) +
                              " variables exceeds the cap of " + std::to_string(max_state_qubits));
    }
    std::vector<std::uint64_t> words(detail::word_count(n), 0);
    for (EdgeMask e : g.edges()) {
        detail::xor_monomial(words, n, e);
    }
    return TruthTable(n, std::move(words));
}

std::uint64_t hw_bruteforce(const Hypergraph& g, int max_state_qubits) {
    return truth_table(g, max_state_qubits).ones_count();
}

namespace {

// Accumulates the subset terms by depth-first traversal keeping the running
// union, one O(1) term per nonempty subset.
void accumulate_subset_terms(const std::vector<EdgeMask>& edges, std::size_t index, int n,
                             EdgeMask acc_union, int taken, __int128& total) {
    if (index == edges.size()) {
        if (taken > 0) {
            const int shift = n - edge_cardinality(acc_union) + taken - 1;
            const __int128 term = __int128(1) << shift;
            total += (taken % 2 == 1) ? term : -term;
        }
        return;
    }
    accumulate_subset_terms(edges, index + 1, n, acc_union, taken, total);
    accumulate_subset_terms(edges, index + 1, n, acc_union | edges[index], taken + 1, total);
}

}  // namespace

std::uint64_t hw_inclusion_exclusion(const Hypergraph& g) {
    if (g.edge_count() > kMaxSubsetEdges) {
        throw InfeasibleError("inclusion-exclusion over " + std::to_string(g.edge_count()) +
                              " edges exceeds the cap of " + std::to_string(kMaxSubsetEdges));
    }
    __int128 total = 0;
    accumulate_subset_terms(g.edges(), 0, g.vertex_count(), 0, 0, total);
    if (total < 0 || total > (__int128(1) << g.vertex_count())) {
        throw std::logic_error("inclusion-exclusion result is not a count in [0, 2^n]");
    }
    return static_cast<std::uint64_t>(total);
}

bool hw_is_odd(const Hypergraph& g) { return g.contains_full_edge(); }

std::uint64_t hw_full_edge_recurrence(const Hypergraph& g) {
    if (!g.contains_full_edge()) {
        throw std::invalid_argument("hw_full_edge_recurrence: the full edge {1..n} is absent");
    }
    const int m = g.edge_count();
    const Hypergraph rest = g.toggled(full_edge(g.vertex_count()));
    const __int128 result =
        __int128(hw_inclusion_exclusion(rest)) + ((m - 1) % 2 == 0 ? 1 : -1);
    if (result < 0) {
        throw std::logic_error("hw_full_edge_recurrence: negative weight");
    }
    return static_cast<std::uint64_t>(result);
}

WeightMethod choose_weight_method(const Hypergraph& g, WeightMethod requested,
                                  int max_state_qubits) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    const bool table_fits = n <= max_state_qubits;
    const bool subsets_fit = m <= kMaxSubsetEdges;
    switch (requested) {
        case WeightMethod::kTruthTable:
            if (!table_fits) {
                throw InfeasibleError("truth-table method infeasible: n = " + std::to_string(n) +
                                      " exceeds " + std::to_string(max_state_qubits));
            }
            return requested;
        case WeightMethod::kInclusionExclusion:
            if (!subsets_fit) {
                throw InfeasibleError("inclusion-exclusion method infeasible: " +
                                      std::to_string(m) + " edges exceed " +
                                      std::to_string(kMaxSubsetEdges));
            }
            return requested;
        case WeightMethod::kAuto:
            if (!table_fits && !subsets_fit) {
                throw InfeasibleError("no feasible weight method: n = " + std::to_string(n) +
                                      " and |E| = " + std::to_string(m) + " both exceed the caps");
            }
            if (!table_fits) {
                return WeightMethod::kInclusionExclusion;
            }
            if (!subsets_fit) {
                return WeightMethod::kTruthTable;
            }
            // Both feasible: 2^n table entries vs 2^m subset terms.
            return n <= m ? WeightMethod::kTruthTable : WeightMethod::kInclusionExclusion;
    }
    throw std::logic_error("choose_weight_method: unknown method");
}

std::uint64_t hamming_weight(const Hypergraph& g, WeightMethod method, int max_state_qubits) {
    switch (choose_weight_method(g, method, max_state_qubits)) {
        case WeightMethod::kTruthTable:
            return hw_bruteforce(g, max_state_qubits);
        case WeightMethod::kInclusionExclusion:
            return hw_inclusion_exclusion(g);
        default:
            throw std::logic_error("hamming_weight: unresolved method");
    }
}

bool WeightConstraint::permits(std::uint64_t hw) const {
    if (kind == Kind::kUnconstrained) {
        return true;
    }
    return std::find(allowed.begin(), allowed.end(), hw) != allowed.end();
}

WeightConstraint rank_weight_bounds(const Hypergraph& g) {
    const int n = g.vertex_count();
    switch (g.rank()) {
        case 0:
            return {WeightConstraint::Kind::kZeroRank, {0, std::uint64_t{1} << n}};
        case 1:
            return {WeightConstraint::Kind::kRankOne, {std::uint64_t{1} << (n - 1)}};
        default:
            return {WeightConstraint::Kind::kUnconstrained, {}};
    }
}

}  // namespace hyperent
