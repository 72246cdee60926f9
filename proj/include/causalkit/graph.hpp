#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace causalkit {

enum class EdgeKind { Directed, Undirected };

// Undirected edges are reported with from < to.
struct Edge {
    int from = -1;
    int to = -1;
    EdgeKind kind = EdgeKind::Directed;

    bool operator==(const Edge&) const = default;
};

// Mixed graph over dense node indices 0..p-1 with at most one edge per
// unordered pair and no self loops. Whether the graph is a DAG, PDAG or
// CPDAG is a property validated by the transformation functions, not a
// separate type; the same object flows through all of them.
class Graph {
public:
    explicit Graph(std::vector<std::string> names);
    explicit Graph(int num_nodes);  // names default to X1..Xp

    static Graph complete_undirected(std::vector<std::string> names);

    int num_nodes() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(int v) const;
    int index_of(const std::string& name) const;  // -1 when absent

    void add_directed_edge(int a, int b);   // a -> b; pair must be free
    void add_undirected_edge(int a, int b); // a -- b; pair must be free
    void remove_edge(int a, int b);
    // Replaces whatever edge exists between a and b (or none) with a -> b.
    void set_directed(int a, int b);

    bool has_directed_edge(int a, int b) const;  // a -> b
    bool has_undirected_edge(int a, int b) const;
    bool adjacent(int a, int b) const;

    const std::set<int>& parents(int v) const;
    const std::set<int>& children(int v) const;
    const std::set<int>& undirected_neighbors(int v) const;
    std::set<int> adjacencies(int v) const;

    std::vector<Edge> edges() const;  // sorted by (min endpoint, max endpoint)
    int num_edges() const;
    int num_directed_edges() const;
    int num_undirected_edges() const;

    bool all_edges_directed() const;
    bool has_directed_cycle() const;  // cycle using directed edges only
    bool is_dag() const { return all_edges_directed() && !has_directed_cycle(); }

    // Optional per-edge annotation (LiNGAM coefficient output). Weights take
    // no part in equality.
    void set_weight(int a, int b, double w);
    std::optional<double> weight(int a, int b) const;

    bool operator==(const Graph& other) const;

private:
    void check_node(int v) const;
    void check_pair(int a, int b) const;
    static std::pair<int, int> key(int a, int b);

    std::vector<std::string> names_;
    std::vector<std::set<int>> parents_;
    std::vector<std::set<int>> children_;
    std::vector<std::set<int>> neighbors_;
    std::map<std::pair<int, int>, double> weights_;
};

}  // namespace causalkit
