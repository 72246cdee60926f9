#pragma once

#include <string>

#include "causalkit/graph.hpp"

namespace causalkit {

// Canonical JSON form:
//   {"nodes": ["X1", ...],
//    "edges": [{"from": "X1", "to": "X2", "type": "directed"|"undirected"}]}
// Edges are sorted by endpoint indices; undirected edges list the lower
// index first; an optional "weight" field carries edge annotations.
std::string graph_to_json(const Graph& g);
Graph graph_from_json(const std::string& text);

Graph load_graph_json(const std::string& path);
void save_graph_json(const Graph& g, const std::string& path);

// DOT with `a -> b` for directed and `a -> b [dir=none]` for undirected edges.
std::string graph_to_dot(const Graph& g);

}  // namespace causalkit
