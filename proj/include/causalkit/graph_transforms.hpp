#pragma once

#include <vector>

#include "causalkit/graph.hpp"

namespace causalkit {

// Canonical representative of g's Markov equivalence class: g's skeleton,
// the v-structures of g oriented, and the Meek closure of those. Every edge
// directed in the result is directed the same way in every DAG equivalent
// to g; every other edge is undirected. Throws CyclicInput unless g is a DAG.
Graph dag_to_cpdag(const Graph& g);

// Applies Meek rules R1-R4 until fixpoint. Only orients undirected edges:
// adjacencies and already-directed edges are untouched, so the closure is
// idempotent and monotone in the directed edge set.
//   R1: a -> b, b -- c, a,c nonadjacent        =>  b -> c
//   R2: a -> b -> c, a -- c                    =>  a -> c
//   R3: a -- b, a -- c, a -- d, c -> b, d -> b,
//       c,d nonadjacent                        =>  a -> b
//   R4: a -- b, a -- c, c -> d, d -> b,
//       c,b nonadjacent                        =>  a -> b
Graph meek_closure(Graph g);

// Consistent extension of a PDAG (same skeleton and v-structures, acyclic,
// fully directed) via sink elimination: repeatedly pick the lowest-index
// node x with no outgoing directed edges whose undirected neighbors are
// adjacent to every other node adjacent to x, orient x's undirected edges
// into x, and retire x. Throws NotExtendable when no candidate exists.
Graph pdag_to_dag(const Graph& g);

// True iff every path between x and y is blocked given S, decided by a
// reachability sweep over (node, approach-direction) states. Requires a DAG
// with x != y and x,y not in S.
bool d_separated(const Graph& g, int x, int y, const std::vector<int>& s);

// Nodes of a DAG in a topological order (parents before children), lowest
// index first among the available choices. Throws CyclicInput.
std::vector<int> topological_order(const Graph& g);

}  // namespace causalkit
