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

#ifndef HYPERENT_ENTROPY_HPP
#define HYPERENT_ENTROPY_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hyperent/hypergraph.hpp"
#include "hyperent/rational.hpp"
#include "hyperent/weight.hpp"

namespace hyperent {

// The local entropic measure on qubit t of a hypergraph state is the
// determinant of the single-qubit reduced density matrix and is computed here
// purely combinatorially: the off-diagonal is a function of the Hamming
// weight of the t-adjacent subhypergraph, and E = 1/4 - a^2 in [0, 1/4]. It
// is a local-unitary invariant, so differing measures certify inequivalence.

/// a = (2^(n-1) - 2·hw(g_t)) / 2^n for an n-qubit state whose t-adjacent
/// subhypergraph has weight hw(g_t) in [0, 2^(n-1)]. Exact reduced fraction.
Rational off_diagonal(int qubit_count, std::uint64_t adjacent_weight);

/// Smallest reduced-density eigenvalue for the same data: 1/2 - |a|.
Rational smallest_eigenvalue(int qubit_count, std::uint64_t adjacent_weight);

/// E_t = 1/4 - a^2 with a = off_diagonal(n, hw(t_adjacent(g, t))); exact.
/// The adjacent weight is computed by the auto-selected feasible method.
Rational entropic_measure(const Hypergraph& g, int t,
                          int max_state_qubits = kMaxStateQubits);

/// The per-qubit vector (E_1, ..., E_n), all exact rationals in [0, 1/4].
struct EntropicProfile {
    int qubit_count = 0;
    std::vector<Rational> measures;  // index t-1

    friend bool operator==(const EntropicProfile&, const EntropicProfile&) = default;
};

EntropicProfile entropic_profile(const Hypergraph& g, int max_state_qubits = kMaxStateQubits);

/// True exactly when every entry of the profile equals 1/4.
bool is_locally_maximally_entangled(const Hypergraph& g,
                                    int max_state_qubits = kMaxStateQubits);

/// What the rank of the t-adjacent subhypergraph forces on E_t. Cases are
/// checked in order, so the first matching rank wins (at n = 2 a rank-1
/// adjacent subhypergraph is classified kGuaranteedMax even though its rank
/// also equals n-1: E_t = 1/4 there, the strict interior never applies).
struct VertexClassification {
    enum class Kind {
        kUnentangled,     // ran(g_t) = 0, forces E = 0 (and conversely)
        kGuaranteedMax,   // ran(g_t) = 1, forces E = 1/4
        kStrictInterior,  // ran(g_t) = n-1 >= 2, forces 0 < E < 1/4
        kUnconstrained,
    };

    Kind kind = Kind::kUnconstrained;
    int adjacent_rank = 0;
    Rational measure;
};

const char* to_string(VertexClassification::Kind kind);

/// Classifies qubit t and verifies the rank-implied constraint on the
/// computed measure (std::logic_error if it ever failed to hold).
VertexClassification classify_vertex(const Hypergraph& g, int t,
                                     int max_state_qubits = kMaxStateQubits);

/// The constraint the hypergraph's own rank places on every entry of the
/// profile: rank <= 1 forces all zeros; rank 2 forces each entry into
/// {0, 1/4}; rank n (full, necessarily >= 3 after the rank-2 case) forces the
/// open interval (0, 1/4); anything else only the closed bound [0, 1/4].
struct ProfileConstraint {
    enum class Kind {
        kAllZero,
        kZeroOrQuarter,
        kOpenInterval,
        kUnconstrained,
    };

    Kind kind = Kind::kUnconstrained;

    bool permits(const Rational& measure) const;
};

ProfileConstraint rank_profile_bounds(const Hypergraph& g);

/// Inequivalence certificate for two states under single-qubit unitaries.
struct LuWitness {
    enum class Kind {
        /// Exactly one of the two hypergraphs contains the full edge {1..n}:
        /// its adjacent weights are all odd, the other's all even, so the
        /// measures differ at every vertex. Vertex 1's values are recorded.
        kParityCertificate,
        /// Profiles differ at the recorded vertex (the smallest one).
        kProfileMismatch,
        /// Sorted profiles differ at the recorded position (qubit
        /// relabeling allowed).
        kSortedProfileMismatch,
        /// Equal profiles certify nothing: the measure is necessary, not
        /// sufficient, for equivalence.
        kInconclusive,
    };

    Kind kind = Kind::kInconclusive;
    std::optional<int> vertex;  // 1-based vertex (or sorted position)
    std::optional<std::pair<Rational, Rational>> values;
};

const char* to_string(LuWitness::Kind kind);

/// Compares per-qubit profiles (or sorted profiles with up_to_relabeling)
/// after the full-edge parity test. Throws std::invalid_argument when the
/// vertex counts differ or are zero.
LuWitness lu_inequivalence_witness(const Hypergraph& g, const Hypergraph& g2,
                                   bool up_to_relabeling = false,
                                   int max_state_qubits = kMaxStateQubits);

}  // namespace hyperent

#endif
