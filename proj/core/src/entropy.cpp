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

#include "hyperent/entropy.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hyperent {

Rational off_diagonal(int qubit_count, std::uint64_t adjacent_weight) {
    if (qubit_count < 1 || qubit_count > kMaxVertices) {
        throw std::invalid_argument("off_diagonal: qubit count out of range");
    }
    const std::uint64_t half = std::uint64_t{1} << (qubit_count - 1);
    if (adjacent_weight > half) {
        throw std::invalid_argument("off_diagonal: adjacent weight exceeds 2^(n-1)");
    }
    const Rational::Int numerator =
        static_cast<Rational::Int>(half) - 2 * static_cast<Rational::Int>(adjacent_weight);
    return Rational::dyadic(numerator, qubit_count);
}

Rational smallest_eigenvalue(int qubit_count, std::uint64_t adjacent_weight) {
    return Rational(1, 2) - off_diagonal(qubit_count, adjacent_weight).abs();
}

Rational entropic_measure(const Hypergraph& g, int t, int max_state_qubits) {
    const std::uint64_t adjacent_weight =
        hamming_weight(g.t_adjacent(t), WeightMethod::kAuto, max_state_qubits);
    const Rational a = off_diagonal(g.vertex_count(), adjacent_weight);
    return Rational(1, 4) - a * a;
}

EntropicProfile entropic_profile(const Hypergraph& g, int max_state_qubits) {
    EntropicProfile profile;
    profile.qubit_count = g.vertex_count();
    profile.measures.reserve(g.vertex_count());
    for (int t = 1; t <= g.vertex_count(); ++t) {
        profile.measures.push_back(entropic_measure(g, t, max_state_qubits));
    }
    return profile;
}

bool is_locally_maximally_entangled(const Hypergraph& g, int max_state_qubits) {
    if (g.vertex_count() == 0) {
        return false;
    }
    const EntropicProfile profile = entropic_profile(g, max_state_qubits);
    return std::all_of(profile.measures.begin(), profile.measures.end(),
                       [](const Rational& m) { return m == Rational(1, 4); });
}

const char* to_string(VertexClassification::Kind kind) {
    switch (kind) {
        case VertexClassification::Kind::kUnentangled:
            return "unentangled";
        case VertexClassification::Kind::kGuaranteedMax:
            return "guaranteed-max";
        case VertexClassification::Kind::kStrictInterior:
            return "strict-interior";
        case VertexClassification::Kind::kUnconstrained:
            return "unconstrained";
    }
    return "?";
}

VertexClassification classify_vertex(const Hypergraph& g, int t, int max_state_qubits) {
    const int n = g.vertex_count();
    const Hypergraph adjacent = g.t_adjacent(t);
    const int adjacent_rank = adjacent.rank();
    const std::uint64_t adjacent_weight =
        hamming_weight(adjacent, WeightMethod::kAuto, max_state_qubits);
    const Rational a = off_diagonal(n, adjacent_weight);
    const Rational measure = Rational(1, 4) - a * a;

    VertexClassification out;
    out.adjacent_rank = adjacent_rank;
    out.measure = measure;

    const Rational zero(0);
    const Rational quarter(1, 4);
    if (adjacent_rank == 0) {
        out.kind = VertexClassification::Kind::kUnentangled;
        if (measure != zero) {
            throw std::logic_error("classify_vertex: rank-0 adjacent subhypergraph with E != 0");
        }
    } else if (adjacent_rank == 1) {
        out.kind = VertexClassification::Kind::kGuaranteedMax;
        if (measure != quarter) {
            throw std::logic_error("classify_vertex: rank-1 adjacent subhypergraph with E != 1/4");
        }
    } else if (adjacent_rank == n - 1) {
        out.kind = VertexClassification::Kind::kStrictInterior;
        if (!(zero < measure && measure < quarter)) {
            throw std::logic_error(
                "classify_vertex: full-rank adjacent subhypergraph with E outside (0, 1/4)");
        }
    } else {
        out.kind = VertexClassification::Kind::kUnconstrained;
        if (measure < zero || measure > quarter) {
            throw std::logic_error("classify_vertex: E outside [0, 1/4]");
        }
    }
    return out;
}

bool ProfileConstraint::permits(const Rational& measure) const {
    const Rational zero(0);
    const Rational quarter(1, 4);
    switch (kind) {
        case Kind::kAllZero:
            return measure == zero;
        case Kind::kZeroOrQuarter:
            return measure == zero || measure == quarter;
        case Kind::kOpenInterval:
            return zero < measure && measure < quarter;
        case Kind::kUnconstrained:
            return zero <= measure && measure <= quarter;
    }
    return false;
}

ProfileConstraint rank_profile_bounds(const Hypergraph& g) {
    const int rank = g.rank();
    if (rank <= 1) {
        return {ProfileConstraint::Kind::kAllZero};
    }
    if (rank == 2) {
        return {ProfileConstraint::Kind::kZeroOrQuarter};
    }
    if (rank == g.vertex_count()) {
        return {ProfileConstraint::Kind::kOpenInterval};
    }
    return {ProfileConstraint::Kind::kUnconstrained};
}

const char* to_string(LuWitness::Kind kind) {
    switch (kind) {
        case LuWitness::Kind::kParityCertificate:
            return "parity-certificate";
        case LuWitness::Kind::kProfileMismatch:
            return "profile-mismatch";
        case LuWitness::Kind::kSortedProfileMismatch:
            return "sorted-profile-mismatch";
        case LuWitness::Kind::kInconclusive:
            return "inconclusive";
    }
    return "?";
}

LuWitness lu_inequivalence_witness(const Hypergraph& g, const Hypergraph& g2,
                                   bool up_to_relabeling, int max_state_qubits) {
    if (g.vertex_count() != g2.vertex_count()) {
        throw std::invalid_argument("lu_inequivalence_witness: vertex counts differ (" +
                                    std::to_string(g.vertex_count()) + " vs " +
                                    std::to_string(g2.vertex_count()) + ")");
    }
    if (g.vertex_count() == 0) {
        throw std::invalid_argument("lu_inequivalence_witness: needs at least one vertex");
    }

    LuWitness witness;
    if (g.contains_full_edge() != g2.contains_full_edge()) {
        witness.kind = LuWitness::Kind::kParityCertificate;
        witness.vertex = 1;
        witness.values = {entropic_measure(g, 1, max_state_qubits),
                          entropic_measure(g2, 1, max_state_qubits)};
        return witness;
    }

    EntropicProfile left = entropic_profile(g, max_state_qubits);
    EntropicProfile right = entropic_profile(g2, max_state_qubits);
    if (up_to_relabeling) {
        std::sort(left.measures.begin(), left.measures.end());
        std::sort(right.measures.begin(), right.measures.end());
    }
    for (int i = 0; i < g.vertex_count(); ++i) {
        if (left.measures[i] != right.measures[i]) {
            witness.kind = up_to_relabeling ? LuWitness::Kind::kSortedProfileMismatch
                                            : LuWitness::Kind::kProfileMismatch;
            witness.vertex = i + 1;
            witness.values = {left.measures[i], right.measures[i]};
            return witness;
        }
    }
    witness.kind = LuWitness::Kind::kInconclusive;
    return witness;
}

}  // namespace hyperent
