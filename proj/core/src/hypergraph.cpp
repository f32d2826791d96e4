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

#include "hyperent/hypergraph.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "json.hpp"

#include "hyperent/errors.hpp"

namespace hyperent {

std::vector<int> edge_vertices(EdgeMask e) {
    std::vector<int> vertices;
    vertices.reserve(static_cast<std::size_t>(std::popcount(e)));
    while (e != 0) {
        int bit = std::countr_zero(e);
        vertices.push_back(bit + 1);
        e &= e - 1;
    }
    return vertices;
}

namespace {

bool canonical_edge_less(EdgeMask a, EdgeMask b) {
    int ca = edge_cardinality(a);
    int cb = edge_cardinality(b);
    return ca != cb ? ca < cb : a < b;
}

}  // namespace

Hypergraph::Hypergraph(int vertex_count, std::vector<EdgeMask> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
    if (n_ < 0 || n_ > kMaxVertices) {
        throw std::invalid_argument("Hypergraph: vertex count must be in [0, " +
                                    std::to_string(kMaxVertices) + "], got " + std::to_string(n_));
    }
    const EdgeMask allowed = full_edge(n_);
    for (EdgeMask e : edges_) {
        if ((e & ~allowed) != 0) {
            throw std::invalid_argument("Hypergraph: edge uses a vertex above " +
                                        std::to_string(n_));
        }
    }
    std::sort(edges_.begin(), edges_.end(), canonical_edge_less);
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool Hypergraph::contains_edge(EdgeMask e) const {
    return std::find(edges_.begin(), edges_.end(), e) != edges_.end();
}

int Hypergraph::rank() const {
    int r = 0;
    for (EdgeMask e : edges_) {
        r = std::max(r, edge_cardinality(e));
    }
    return r;
}

bool Hypergraph::is_graph() const {
    return std::all_of(edges_.begin(), edges_.end(),
                       [](EdgeMask e) { return edge_cardinality(e) == 2; });
}

Hypergraph Hypergraph::t_adjacent(int t) const {
    if (t < 1 || t > n_) {
        throw std::out_of_range("t_adjacent: vertex " + std::to_string(t) +
                                " out of range 1.." + std::to_string(n_));
    }
    const EdgeMask t_bit = EdgeMask{1} << (t - 1);
    const EdgeMask below = t_bit - 1;
    std::vector<EdgeMask> kept;
    for (EdgeMask e : edges_) {
        if (e & t_bit) {
            // Drop t and close the gap: bits above t shift down one place.
            kept.push_back((e & below) | ((e >> 1) & ~below));
        }
    }
    return Hypergraph(n_ - 1, std::move(kept));
}

Hypergraph Hypergraph::toggled(EdgeMask e) const {
    if ((e & ~full_edge(n_)) != 0) {
        throw std::invalid_argument("toggled: edge uses a vertex above " + std::to_string(n_));
    }
    std::vector<EdgeMask> edges = edges_;
    auto it = std::find(edges.begin(), edges.end(), e);
    if (it == edges.end()) {
        edges.push_back(e);
    } else {
        edges.erase(it);
    }
    return Hypergraph(n_, std::move(edges));
}

Hypergraph Hypergraph::from_edge_set_mask(int vertex_count, std::uint64_t set_mask) {
    if (vertex_count < 0 || vertex_count > 6) {
        throw std::invalid_argument("from_edge_set_mask: needs 0 <= n <= 6");
    }
    const int candidates = 1 << vertex_count;
    if (vertex_count < 6 && (set_mask >> candidates) != 0) {
        throw std::invalid_argument("from_edge_set_mask: set mask selects a nonexistent edge");
    }
    std::vector<EdgeMask> edges;
    for (int j = 0; j < candidates; ++j) {
        if ((set_mask >> j) & 1) {
            edges.push_back(static_cast<EdgeMask>(j));
        }
    }
    return Hypergraph(vertex_count, std::move(edges));
}

namespace {

struct TextScanner {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
        }
    }

    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("hypergraph text: " + what + " at offset " + std::to_string(pos));
    }

    char peek() const { return pos < text.size() ? text[pos] : '\0'; }

    void expect(char c) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c) {
            fail(std::string("expected '") + c + "'");
        }
        ++pos;
    }

    long parse_int() {
        skip_ws();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
            fail("expected an unsigned integer");
        }
        long value = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            value = value * 10 + (text[pos] - '0');
            if (value > 1'000'000) {
                fail("integer too large");
            }
            ++pos;
        }
        return value;
    }
};

int checked_vertex_count(long n) {
    if (n < 1 || n > kMaxVertices) {
        throw ParseError("hypergraph: vertex count must be in [1, " +
                         std::to_string(kMaxVertices) + "], got " + std::to_string(n));
    }
    return static_cast<int>(n);
}

EdgeMask checked_vertex_bit(long v, int n) {
    if (v < 1 || v > n) {
        throw ParseError("hypergraph: vertex " + std::to_string(v) + " out of range 1.." +
                         std::to_string(n));
    }
    return EdgeMask{1} << (v - 1);
}

}  // namespace

Hypergraph Hypergraph::parse(std::string_view text) {
    TextScanner scan{text};
    const int n = checked_vertex_count(scan.parse_int());
    scan.expect(':');
    std::vector<EdgeMask> edges;
    while (!scan.at_end()) {
        scan.expect('{');
        EdgeMask edge = 0;
        scan.skip_ws();
        if (scan.peek() != '}') {
            while (true) {
                edge |= checked_vertex_bit(scan.parse_int(), n);
                scan.skip_ws();
                if (scan.peek() == ',') {
                    ++scan.pos;
                    continue;
                }
                break;
            }
        }
        scan.expect('}');
        edges.push_back(edge);
    }
    return Hypergraph(n, std::move(edges));
}

Hypergraph Hypergraph::from_json_text(std::string_view json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("hypergraph JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges")) {
        throw ParseError("hypergraph JSON: expected an object with \"n\" and \"edges\"");
    }
    if (!doc["n"].is_number_integer()) {
        throw ParseError("hypergraph JSON: \"n\" must be an integer");
    }
    const int n = checked_vertex_count(doc["n"].get<long>());
    if (!doc["edges"].is_array()) {
        throw ParseError("hypergraph JSON: \"edges\" must be an array of vertex arrays");
    }
    std::vector<EdgeMask> edges;
    for (const auto& entry : doc["edges"]) {
        if (!entry.is_array()) {
            throw ParseError("hypergraph JSON: each edge must be an array of vertices");
        }
        EdgeMask edge = 0;
        for (const auto& v : entry) {
            if (!v.is_number_integer()) {
                throw ParseError("hypergraph JSON: vertices must be integers");
            }
            edge |= checked_vertex_bit(v.get<long>(), n);
        }
        edges.push_back(edge);
    }
    return Hypergraph(n, std::move(edges));
}

std::string Hypergraph::to_compact() const {
    std::string out = std::to_string(n_) + ":";
    for (EdgeMask e : edges_) {
        out += " {";
        bool first = true;
        for (int v : edge_vertices(e)) {
            if (!first) {
                out += ",";
            }
            out += std::to_string(v);
            first = false;
        }
        out += "}";
    }
    return out;
}

std::string Hypergraph::to_json_text() const {
    nlohmann::json edges = nlohmann::json::array();
    for (EdgeMask e : edges_) {
        edges.push_back(edge_vertices(e));
    }
    nlohmann::json doc;
    doc["n"] = n_;
    doc["edges"] = std::move(edges);
    return doc.dump();
}

}  // namespace hyperent
