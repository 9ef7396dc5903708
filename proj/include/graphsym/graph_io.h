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

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "graphsym/graph.h"

namespace graphsym::cli {

/// Malformed graph file. what() is prefixed with "<source>:<line>: ".
class ParseError : public std::runtime_error {
   public:
    ParseError(const std::string &source, int line, const std::string &message)
        : std::runtime_error(source + ":" + std::to_string(line) + ": " + message), line_(line) {
    }
    int line() const {
        return line_;
    }

   private:
    int line_;
};

/// Line-oriented graph description:
///
///     # comment
///     graph N [d D] [directed]
///     u v
///     ...
///
/// Vertices are 1-based. Directed files list "origin target".
struct GraphFile {
    int num_vertices = 0;
    std::optional<int> levels;
    bool directed = false;
    std::vector<std::pair<Vertex, Vertex>> edges;

    UndirectedGraph undirected() const;
    OrientedGraph oriented() const;
};

GraphFile parse_graph(std::istream &in, const std::string &source = "<input>");
GraphFile parse_graph(const std::string &text, const std::string &source = "<input>");
GraphFile load_graph_file(const std::string &path);

std::string format_graph(const GraphFile &graph);

}  // namespace graphsym::cli
