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

#ifndef HYPERENT_WEIGHT_HPP
#define HYPERENT_WEIGHT_HPP

#include <cstdint>
#include <vector>

#include "hyperent/hypergraph.hpp"

namespace hyperent {

// A hypergraph g on n vertices determines the Boolean function
//   u(g)(x_1..x_n) = XOR over edges e of the monomial AND_{i in e} x_i,
// where the empty edge contributes the constant 1. The Hamming weight of g is
// the number of inputs on which u(g) is 1. Two independent routes compute it:
// exhaustive truth-table evaluation (the reference oracle) and the exact
// inclusion-exclusion expansion over edge subsets.

/// Truth table of u(g), bit-packed 64 entries per word: bit x of the packed
/// words is the value at input x, where bit i-1 of x is variable x_i. Unused
/// high bits of a partial word (n < 6) are kept zero.
class TruthTable {
  public:
    TruthTable(int variable_count, std::vector<std::uint64_t> packed_words);

    int variable_count() const { return n_; }
    std::uint64_t size() const { return std::uint64_t{1} << n_; }
    bool value(std::uint64_t x) const;
    const std::vector<std::uint64_t>& words() const { return words_; }

    /// Number of inputs mapped to 1.
    std::uint64_t ones_count() const;

    friend bool operator==(const TruthTable&, const TruthTable&) = default;

  private:
    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Evaluates u(g) on all 2^n inputs. Throws InfeasibleError when
/// n > max_state_qubits.
TruthTable truth_table(const Hypergraph& g, int max_state_qubits = kMaxStateQubits);

/// Hamming weight by exhaustive truth-table evaluation, the reference oracle
/// for every other weight computation. Throws InfeasibleError when
/// n > max_state_qubits.
std::uint64_t hw_bruteforce(const Hypergraph& g, int max_state_qubits = kMaxStateQubits);

/// Hamming weight by the exact inclusion-exclusion expansion: the sum over
/// nonempty edge subsets S of (-2)^(|S|-1) * 2^(n - |union of S|), evaluated
/// in 128-bit integers (|sum| <= 2^(n-1)·3^m <= 2^100 for n <= 63, m <= 24,
/// so no overflow). Works for any n; throws InfeasibleError when the edge
/// count exceeds kMaxSubsetEdges.
std::uint64_t hw_inclusion_exclusion(const Hypergraph& g);

/// Weight parity without computing the weight: hw(g) is odd exactly when the
/// full edge {1..n} is present.
bool hw_is_odd(const Hypergraph& g);

/// For g containing the full edge {1..n}: hw(g) = hw(g') + (-1)^(m-1), where
/// g' drops the full edge and m is g's edge count. Throws
/// std::invalid_argument when the full edge is absent.
std::uint64_t hw_full_edge_recurrence(const Hypergraph& g);

enum class WeightMethod {
    kAuto,
    kTruthTable,
    kInclusionExclusion,
};

/// Resolves kAuto to a concrete feasible method (the cheaper of the two when
/// both fit: 2^n table vs 2^m subsets) and validates explicit requests.
/// Throws InfeasibleError when no requested/feasible method exists.
WeightMethod choose_weight_method(const Hypergraph& g, WeightMethod requested,
                                  int max_state_qubits = kMaxStateQubits);

/// Hamming weight via the chosen (or auto-selected) method.
std::uint64_t hamming_weight(const Hypergraph& g, WeightMethod method = WeightMethod::kAuto,
                             int max_state_qubits = kMaxStateQubits);

/// The constraint a hypergraph's rank places on its weight: rank 0 forces
/// hw in {0, 2^n}, rank 1 forces hw = 2^(n-1), anything else is unconstrained.
struct WeightConstraint {
    enum class Kind {
        kZeroRank,
        kRankOne,
        kUnconstrained,
    };

    Kind kind = Kind::kUnconstrained;
    std::vector<std::uint64_t> allowed;  // empty when unconstrained

    bool permits(std::uint64_t hw) const;
};

WeightConstraint rank_weight_bounds(const Hypergraph& g);

}  // namespace hyperent

#endif
