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

#include "graphsym/graph_io.h"

#include <fstream>
#include <sstream>

#include "graphsym/errors.h"

namespace graphsym::cli {

UndirectedGraph GraphFile::undirected() const {
    return UndirectedGraph(num_vertices, edges);
}

OrientedGraph GraphFile::oriented() const {
    std::vector<DirectedEdge> directed_edges;
    for (auto [origin, target] : edges) {
        directed_edges.push_back({origin, target});
    }
    return OrientedGraph(num_vertices, std::move(directed_edges));
}

namespace {

std::vector<std::string> tokenize(const std::string &line) {
    std::string body = line.substr(0, line.find('#'));
    std::istringstream in(body);
    std::vector<std::string> tokens;
    std::string token;
    while (in >> token) {
        tokens.push_back(token);
    }
    return tokens;
}

int parse_int(const std::string &token, const std::string &source, int line, const std::string &what) {
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(token, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used != token.size() || token.empty()) {
        throw ParseError(source, line, "expected integer " + what + ", got '" + token + "'");
    }
    return value;
}

}  // namespace

GraphFile parse_graph(std::istream &in, const std::string &source) {
    GraphFile graph;
    bool have_header = false;
    std::vector<std::vector<int>> seen_on_line;
    std::string line;
    int line_number = 0;
    while (std::getline(in, line)) {
        line_number++;
        auto tokens = tokenize(line);
        if (tokens.empty()) {
            continue;
        }
        if (!have_header) {
            if (tokens[0] != "graph" || tokens.size() < 2) {
                throw ParseError(source, line_number, "expected header 'graph N [d D] [directed]'");
            }
            graph.num_vertices = parse_int(tokens[1], source, line_number, "vertex count");
            if (graph.num_vertices < 1) {
                throw ParseError(source, line_number, "vertex count must be positive");
            }
            for (std::size_t i = 2; i < tokens.size(); i++) {
                if (tokens[i] == "directed" && !graph.directed) {
                    graph.directed = true;
                } else if (tokens[i] == "d" && i + 1 < tokens.size() && !graph.levels) {
                    graph.levels = parse_int(tokens[++i], source, line_number, "level count");
                    if (*graph.levels < 2) {
                        throw ParseError(source, line_number, "level count must be at least 2");
                    }
                } else {
                    throw ParseError(source, line_number, "unexpected header token '" + tokens[i] + "'");
                }
            }
            seen_on_line.assign(graph.num_vertices + 1, std::vector<int>(graph.num_vertices + 1, 0));
            have_header = true;
            continue;
        }
        if (tokens.size() != 2) {
            throw ParseError(source, line_number, "expected edge 'u v'");
        }
        int u = parse_int(tokens[0], source, line_number, "vertex");
        int v = parse_int(tokens[1], source, line_number, "vertex");
        for (int x : {u, v}) {
            if (x < 1 || x > graph.num_vertices) {
                throw ParseError(
                    source, line_number,
                    "vertex " + std::to_string(x) + " out of range [1, " + std::to_string(graph.num_vertices) + "]");
            }
        }
        if (u == v) {
            throw ParseError(source, line_number, "self-loop at vertex " + std::to_string(u));
        }
        if (int previous = seen_on_line[u][v]) {
            throw ParseError(
                source, line_number,
                "duplicate edge between " + std::to_string(u) + " and " + std::to_string(v) + " (first on line " +
                    std::to_string(previous) + ")");
        }
        seen_on_line[u][v] = seen_on_line[v][u] = line_number;
        graph.edges.emplace_back(u, v);
    }
    if (!have_header) {
        throw ParseError(source, line_number, "missing header 'graph N [d D] [directed]'");
    }
    if (graph.directed && graph.num_vertices < 2) {
        throw ParseError(source, 1, "directed graphs need at least two vertices");
    }
    return graph;
}

GraphFile parse_graph(const std::string &text, const std::string &source) {
    std::istringstream in(text);
    return parse_graph(in, source);
}

GraphFile load_graph_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw DomainError("cannot open graph file '" + path + "'");
    }
    return parse_graph(in, path);
}

std::string format_graph(const GraphFile &graph) {
    std::ostringstream out;
    out << "graph " << graph.num_vertices;
    if (graph.levels) {
        out << " d " << *graph.levels;
    }
    if (graph.directed) {
        out << " directed";
    }
    out << '\n';
    for (auto [u, v] : graph.edges) {
        out << u << ' ' << v << '\n';
    }
    return out.str();
}

}  // namespace graphsym::cli
