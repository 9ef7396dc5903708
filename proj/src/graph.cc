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

#include "graphsym/graph.h"

#include <algorithm>
#include <deque>
#include <sstream>

#include "graphsym/errors.h"

namespace graphsym {

namespace {

void check_vertex(int num_vertices, Vertex v) {
    if (v < 1 || v > num_vertices) {
        throw DomainError("vertex " + std::to_string(v) + " out of range [1, " + std::to_string(num_vertices) + "]");
    }
}

std::string pair_str(Vertex a, Vertex b) {
    return "{" + std::to_string(a) + "," + std::to_string(b) + "}";
}

}  // namespace

UndirectedGraph::UndirectedGraph(int num_vertices, std::vector<std::pair<Vertex, Vertex>> edges)
    : num_vertices_(num_vertices), adjacency_(num_vertices + 1, std::vector<bool>(num_vertices + 1, false)) {
    if (num_vertices < 1) {
        throw DomainError("a graph needs at least one vertex");
    }
    for (auto [a, b] : edges) {
        check_vertex(num_vertices, a);
        check_vertex(num_vertices, b);
        if (a == b) {
            throw DomainError("self-loop at vertex " + std::to_string(a));
        }
        if (adjacency_[a][b]) {
            throw DomainError("duplicate edge " + pair_str(a, b));
        }
        adjacency_[a][b] = adjacency_[b][a] = true;
        edges_.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(edges_.begin(), edges_.end());
}

bool UndirectedGraph::adjacent(Vertex a, Vertex b) const {
    check_vertex(num_vertices_, a);
    check_vertex(num_vertices_, b);
    return adjacency_[a][b];
}

std::vector<Vertex> UndirectedGraph::neighbors(Vertex v) const {
    check_vertex(num_vertices_, v);
    std::vector<Vertex> result;
    for (Vertex u = 1; u <= num_vertices_; u++) {
        if (adjacency_[v][u]) {
            result.push_back(u);
        }
    }
    return result;
}

OrientedGraph::OrientedGraph(int num_vertices, std::vector<DirectedEdge> edges)
    : num_vertices_(num_vertices), edges_(std::move(edges)) {
    if (num_vertices < 2) {
        throw DomainError("an oriented graph needs at least two vertices");
    }
    std::vector<std::vector<bool>> seen(num_vertices + 1, std::vector<bool>(num_vertices + 1, false));
    for (const auto &e : edges_) {
        check_vertex(num_vertices, e.origin);
        check_vertex(num_vertices, e.target);
        if (e.origin == e.target) {
            throw DomainError("self-loop at vertex " + std::to_string(e.origin));
        }
        if (seen[e.origin][e.target]) {
            throw DomainError("more than one edge between vertices " + pair_str(e.origin, e.target));
        }
        seen[e.origin][e.target] = seen[e.target][e.origin] = true;
    }
}

std::optional<DirectedEdge> OrientedGraph::edge_between(Vertex a, Vertex b) const {
    for (const auto &e : edges_) {
        if ((e.origin == a && e.target == b) || (e.origin == b && e.target == a)) {
            return e;
        }
    }
    return std::nullopt;
}

bool OrientedGraph::is_complete() const {
    return static_cast<long>(edges_.size()) == static_cast<long>(num_vertices_) * (num_vertices_ - 1) / 2;
}

UndirectedGraph OrientedGraph::underlying() const {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (const auto &e : edges_) {
        pairs.emplace_back(e.origin, e.target);
    }
    return UndirectedGraph(num_vertices_, std::move(pairs));
}

OrientedGraph hierarchical_complete_graph(int num_vertices) {
    std::vector<DirectedEdge> edges;
    for (Vertex j = 2; j <= num_vertices; j++) {
        for (Vertex i = 1; i < j; i++) {
            edges.push_back({j, i});
        }
    }
    return OrientedGraph(num_vertices, std::move(edges));
}

UndirectedGraph complete_graph(int num_vertices) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex a = 1; a <= num_vertices; a++) {
        for (Vertex b = a + 1; b <= num_vertices; b++) {
            edges.emplace_back(a, b);
        }
    }
    return UndirectedGraph(num_vertices, std::move(edges));
}

std::string SubstructureWitness::str() const {
    std::ostringstream out;
    out << (kind == SubstructureKind::kH1 ? "h1" : "h2") << "(" << u << ", " << w << ", " << v << ")";
    return out.str();
}

bool is_complete(const UndirectedGraph &g) {
    long n = g.num_vertices();
    return static_cast<long>(g.edges().size()) == n * (n - 1) / 2;
}

namespace {

/// BFS distances from source; -1 marks unreachable vertices.
std::vector<int> distances_from(const UndirectedGraph &g, Vertex source) {
    std::vector<int> dist(g.num_vertices() + 1, -1);
    std::deque<Vertex> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        Vertex x = queue.front();
        queue.pop_front();
        for (Vertex y : g.neighbors(x)) {
            if (dist[y] < 0) {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    return dist;
}

}  // namespace

bool same_component(const UndirectedGraph &g, Vertex a, Vertex b) {
    return distances_from(g, a)[b] >= 0;
}

std::optional<SubstructureWitness> find_witness(const UndirectedGraph &g) {
    if (g.edges().empty()) {
        throw DomainError("witness search needs a nontrivial graph (at least one edge)");
    }
    const int n = g.num_vertices();
    for (Vertex u = 1; u <= n; u++) {
        for (Vertex v = u + 1; v <= n; v++) {
            if (g.adjacent(u, v)) {
                continue;
            }
            auto to_v = distances_from(g, v);
            if (to_v[u] >= 0) {
                // Walk from u towards v, always stepping to the lowest-indexed
                // vertex one step closer. The first three vertices of a shortest
                // path between non-adjacent endpoints are an induced path.
                Vertex w0 = u;
                Vertex w1 = 0;
                for (Vertex y : g.neighbors(w0)) {
                    if (to_v[y] == to_v[w0] - 1) {
                        w1 = y;
                        break;
                    }
                }
                Vertex w2 = 0;
                for (Vertex y : g.neighbors(w1)) {
                    if (to_v[y] == to_v[w1] - 1) {
                        w2 = y;
                        break;
                    }
                }
                return SubstructureWitness{SubstructureKind::kH1, w0, w1, w2};
            }
            auto nu = g.neighbors(u);
            if (!nu.empty()) {
                return SubstructureWitness{SubstructureKind::kH2, u, nu.front(), v};
            }
            auto nv = g.neighbors(v);
            if (!nv.empty()) {
                return SubstructureWitness{SubstructureKind::kH2, v, nv.front(), u};
            }
        }
    }
    return std::nullopt;
}

bool witness_is_valid(const UndirectedGraph &g, const SubstructureWitness &witness) {
    auto [kind, u, w, v] = witness;
    int n = g.num_vertices();
    for (Vertex x : {u, w, v}) {
        if (x < 1 || x > n) {
            return false;
        }
    }
    if (u == w || w == v || u == v) {
        return false;
    }
    if (kind == SubstructureKind::kH1) {
        return g.adjacent(u, w) && g.adjacent(w, v) && !g.adjacent(u, v);
    }
    return g.adjacent(u, w) && !same_component(g, u, v);
}

std::vector<Vertex> neighbors(const OrientedGraph &g, Vertex v) {
    check_vertex(g.num_vertices(), v);
    std::vector<Vertex> result;
    for (const auto &e : g.edges()) {
        if (e.origin == v) {
            result.push_back(e.target);
        } else if (e.target == v) {
            result.push_back(e.origin);
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

OrientedGraph prefix_subgraph(const OrientedGraph &g, int m) {
    if (m < 2 || m > g.num_vertices()) {
        throw DomainError(
            "prefix size " + std::to_string(m) + " out of range [2, " + std::to_string(g.num_vertices()) + "]");
    }
    std::vector<DirectedEdge> kept;
    for (const auto &e : g.edges()) {
        if (e.origin <= m && e.target <= m) {
            kept.push_back(e);
        }
    }
    return OrientedGraph(m, std::move(kept));
}

std::vector<UndirectedGraph> enumerate_undirected(int n) {
    if (n < 1) {
        throw DomainError("enumeration needs at least one vertex");
    }
    if (n > kMaxEnumeratedVertices) {
        throw CapacityError(
            "enumerating graphs on " + std::to_string(n) + " vertices exceeds the cap of " +
            std::to_string(kMaxEnumeratedVertices));
    }
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex a = 1; a <= n; a++) {
        for (Vertex b = a + 1; b <= n; b++) {
            pairs.emplace_back(a, b);
        }
    }
    const std::size_t count = std::size_t{1} << pairs.size();
    std::vector<UndirectedGraph> graphs;
    graphs.reserve(count);
    for (std::size_t mask = 0; mask < count; mask++) {
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (std::size_t r = 0; r < pairs.size(); r++) {
            if (mask >> r & 1) {
                edges.push_back(pairs[r]);
            }
        }
        graphs.emplace_back(n, std::move(edges));
    }
    return graphs;
}

}  // namespace graphsym
