// Copyright 2026 The graphsym Authors
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

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace graphsym {

/// One-based vertex label.
using Vertex = int;

/// Simple undirected graph on vertices 1..N. Edges are stored normalized as
/// (a, b) with a < b, sorted, without duplicates.
class UndirectedGraph {
   public:
    /// Throws DomainError on self-loops, out-of-range endpoints or duplicates.
    UndirectedGraph(int num_vertices, std::vector<std::pair<Vertex, Vertex>> edges);

    int num_vertices() const {
        return num_vertices_;
    }
    const std::vector<std::pair<Vertex, Vertex>> &edges() const {
        return edges_;
    }
    bool adjacent(Vertex a, Vertex b) const;
    std::vector<Vertex> neighbors(Vertex v) const;

    bool operator==(const UndirectedGraph &) const = default;

   private:
    int num_vertices_;
    std::vector<std::pair<Vertex, Vertex>> edges_;
    std::vector<std::vector<bool>> adjacency_;
};

struct DirectedEdge {
    Vertex origin;
    Vertex target;

    bool operator==(const DirectedEdge &) const = default;
};

/// Directed graph with implicit vertex ordering 1..N. Each unordered pair
/// carries at most one edge; the edge's origin selects the GR control.
class OrientedGraph {
   public:
    OrientedGraph(int num_vertices, std::vector<DirectedEdge> edges);

    int num_vertices() const {
        return num_vertices_;
    }
    /// Insertion order.
    const std::vector<DirectedEdge> &edges() const {
        return edges_;
    }
    /// The edge joining a and b in either orientation.
    std::optional<DirectedEdge> edge_between(Vertex a, Vertex b) const;
    bool is_complete() const;

    /// Adjacency ignoring orientation.
    UndirectedGraph underlying() const;

    bool operator==(const OrientedGraph &) const = default;

   private:
    int num_vertices_;
    std::vector<DirectedEdge> edges_;
};

/// Complete graph with every edge directed from the higher to the lower index.
OrientedGraph hierarchical_complete_graph(int num_vertices);
UndirectedGraph complete_graph(int num_vertices);

enum class SubstructureKind { kH1, kH2 };

/// h1: (u, w, v) with u-w and w-v present and u-v absent.
/// h2: (u, w, v) with u-w present and v in another connected component.
struct SubstructureWitness {
    SubstructureKind kind;
    Vertex u;
    Vertex w;
    Vertex v;

    bool operator==(const SubstructureWitness &) const = default;
    std::string str() const;
};

bool is_complete(const UndirectedGraph &g);

/// Returns nullopt iff g is complete. Scans non-adjacent pairs in
/// lexicographic order; for the first pair joined by a path, the
/// lexicographically smallest shortest path supplies an h1 witness from its
/// first three vertices. Pairs in different components give h2 when either
/// endpoint has a neighbour. Throws DomainError for edgeless graphs.
std::optional<SubstructureWitness> find_witness(const UndirectedGraph &g);

/// Recomputes the witness's edge pattern against g.
bool witness_is_valid(const UndirectedGraph &g, const SubstructureWitness &witness);

bool same_component(const UndirectedGraph &g, Vertex a, Vertex b);

/// Vertices sharing an edge with v in either orientation, ascending.
std::vector<Vertex> neighbors(const OrientedGraph &g, Vertex v);

/// Induced subgraph on 1..m, orientations kept.
OrientedGraph prefix_subgraph(const OrientedGraph &g, int m);

inline constexpr int kMaxEnumeratedVertices = 6;

/// All 2^(n(n-1)/2) labeled simple graphs on n vertices. Graph number `mask`
/// contains the pair with lexicographic rank r iff bit r of mask is set, so
/// index 0 is edgeless and the last index is complete.
std::vector<UndirectedGraph> enumerate_undirected(int n);

}  // namespace graphsym
