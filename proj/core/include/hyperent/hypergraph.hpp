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

#ifndef HYPERENT_HYPERGRAPH_HPP
#define HYPERENT_HYPERGRAPH_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hyperent {

/// One hyperedge as a bit pattern over vertices 1..n: bit i-1 is set exactly
/// when vertex i is incident. The all-zero mask is the empty hyperedge.
using EdgeMask = std::uint64_t;

/// Structural cap on the vertex count (mask width; keeps 2^n inside uint64_t).
inline constexpr int kMaxVertices = 63;

/// Cap for every code path that materializes a 2^n-entry table or state
/// vector (truth tables, sign vectors, amplitude vectors).
inline constexpr int kMaxStateQubits = 20;

/// Cap on the edge count for the 2^m subset enumeration of the
/// inclusion-exclusion weight formula.
inline constexpr int kMaxSubsetEdges = 24;

inline int edge_cardinality(EdgeMask e) { return std::popcount(e); }

/// The edge {1,...,n}; n = 0 gives the empty hyperedge.
inline EdgeMask full_edge(int vertex_count) {
    return vertex_count == 0 ? 0 : (EdgeMask(~std::uint64_t{0}) >> (64 - vertex_count));
}

/// Ascending 1-based vertex labels of an edge.
std::vector<int> edge_vertices(EdgeMask e);

/// An undirected hypergraph on labeled vertices 1..n. Edges form a set: they
/// are deduplicated on construction and kept in a canonical order (cardinality
/// ascending, then mask value ascending), so equal hypergraphs compare equal
/// and serialization is deterministic.
///
/// Instances are immutable after construction; every operation is a pure
/// function, so values can be shared freely across threads.
class Hypergraph {
  public:
    /// Validates 0 <= vertex_count <= kMaxVertices and every edge within
    /// {1..vertex_count}; deduplicates. A vertex count of 0 never comes from
    /// input parsing but is the natural value of t_adjacent on one vertex.
    Hypergraph(int vertex_count, std::vector<EdgeMask> edges);

    static Hypergraph empty(int vertex_count) { return Hypergraph(vertex_count, {}); }

    /// Compact text format: `<n>: {i,j,...} {k,...} ...` with `{}` for the
    /// empty hyperedge; vertices are 1-based; requires 1 <= n <= kMaxVertices.
    /// Throws ParseError on malformed input.
    static Hypergraph parse(std::string_view text);

    /// JSON format: {"n": 4, "edges": [[4],[1,2],[3,4],[2,3,4]]} with [] for
    /// the empty hyperedge. Throws ParseError on malformed input.
    static Hypergraph from_json_text(std::string_view json_text);

    /// Decodes an edge-set bitmask: bit j set includes the edge whose mask is
    /// j. Covers the full census of hypergraphs on n vertices for n <= 6
    /// (2^(2^n) edge sets). Indexing by ascending set_mask is the canonical
    /// enumeration order.
    static Hypergraph from_edge_set_mask(int vertex_count, std::uint64_t set_mask);

    int vertex_count() const { return n_; }
    const std::vector<EdgeMask>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    bool contains_edge(EdgeMask e) const;

    /// Maximum edge cardinality; 0 for an empty edge set or {∅}.
    int rank() const;

    /// True exactly when the all-vertices edge {1..n} is present.
    bool contains_full_edge() const { return contains_edge(full_edge(n_)); }

    /// True when every edge has cardinality exactly 2 (vacuously true for an
    /// empty edge set).
    bool is_graph() const;

    /// The subhypergraph controlling vertex t: keeps the edges containing t,
    /// drops t from them, and relabels the remaining vertices 1..n-1
    /// preserving their original order. Result has n-1 vertices.
    Hypergraph t_adjacent(int t) const;

    /// Copy with edge e added if absent, removed if present.
    Hypergraph toggled(EdgeMask e) const;

    std::string to_compact() const;
    std::string to_json_text() const;

    friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

  private:
    int n_ = 0;
    std::vector<EdgeMask> edges_;
};

}  // namespace hyperent

#endif
