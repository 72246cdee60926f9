#include "causalkit/graph.hpp"

#include <algorithm>

#include "causalkit/errors.hpp"

namespace causalkit {

Graph::Graph(std::vector<std::string> names)
    : names_(std::move(names)),
      parents_(names_.size()),
      children_(names_.size()),
      neighbors_(names_.size()) {}

Graph::Graph(int num_nodes) {
    names_.reserve(num_nodes);
    for (int i = 0; i < num_nodes; ++i) names_.push_back("X" + std::to_string(i + 1));
    parents_.resize(num_nodes);
    children_.resize(num_nodes);
    neighbors_.resize(num_nodes);
}

Graph Graph::complete_undirected(std::vector<std::string> names) {
    Graph g(std::move(names));
    const int p = g.num_nodes();
    for (int a = 0; a < p; ++a)
        for (int b = a + 1; b < p; ++b) g.add_undirected_edge(a, b);
    return g;
}

const std::string& Graph::name(int v) const {
    check_node(v);
    return names_[v];
}

int Graph::index_of(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

void Graph::check_node(int v) const {
    if (v < 0 || v >= num_nodes())
        throw NodeOutOfRange("node index " + std::to_string(v) + " out of range [0, " +
                             std::to_string(num_nodes()) + ")");
}

void Graph::check_pair(int a, int b) const {
    check_node(a);
    check_node(b);
    if (a == b) throw Error("self loops are not allowed (node " + std::to_string(a) + ")");
}

std::pair<int, int> Graph::key(int a, int b) {
    return {std::min(a, b), std::max(a, b)};
}

void Graph::add_directed_edge(int a, int b) {
    check_pair(a, b);
    if (adjacent(a, b))
        throw Error("pair (" + std::to_string(a) + "," + std::to_string(b) + ") already has an edge");
    children_[a].insert(b);
    parents_[b].insert(a);
}

void Graph::add_undirected_edge(int a, int b) {
    check_pair(a, b);
    if (adjacent(a, b))
        throw Error("pair (" + std::to_string(a) + "," + std::to_string(b) + ") already has an edge");
    neighbors_[a].insert(b);
    neighbors_[b].insert(a);
}

void Graph::remove_edge(int a, int b) {
    check_pair(a, b);
    children_[a].erase(b);
    children_[b].erase(a);
    parents_[a].erase(b);
    parents_[b].erase(a);
    neighbors_[a].erase(b);
    neighbors_[b].erase(a);
    weights_.erase(key(a, b));
}

void Graph::set_directed(int a, int b) {
    check_pair(a, b);
    remove_edge(a, b);
    add_directed_edge(a, b);
}

bool Graph::has_directed_edge(int a, int b) const {
    check_pair(a, b);
    return children_[a].count(b) > 0;
}

bool Graph::has_undirected_edge(int a, int b) const {
    check_pair(a, b);
    return neighbors_[a].count(b) > 0;
}

bool Graph::adjacent(int a, int b) const {
    check_pair(a, b);
    return children_[a].count(b) || children_[b].count(a) || neighbors_[a].count(b);
}

const std::set<int>& Graph::parents(int v) const {
    check_node(v);
    return parents_[v];
}

const std::set<int>& Graph::children(int v) const {
    check_node(v);
    return children_[v];
}

const std::set<int>& Graph::undirected_neighbors(int v) const {
    check_node(v);
    return neighbors_[v];
}

std::set<int> Graph::adjacencies(int v) const {
    check_node(v);
    std::set<int> adj = neighbors_[v];
    adj.insert(parents_[v].begin(), parents_[v].end());
    adj.insert(children_[v].begin(), children_[v].end());
    return adj;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int a = 0; a < num_nodes(); ++a) {
        for (int b : children_[a]) out.push_back({a, b, EdgeKind::Directed});
        for (int b : neighbors_[a])
            if (a < b) out.push_back({a, b, EdgeKind::Undirected});
    }
    std::sort(out.begin(), out.end(), [](const Edge& x, const Edge& y) {
        return key(x.from, x.to) < key(y.from, y.to);
    });
    return out;
}

int Graph::num_edges() const { return num_directed_edges() + num_undirected_edges(); }

int Graph::num_directed_edges() const {
    int c = 0;
    for (const auto& s : children_) c += static_cast<int>(s.size());
    return c;
}

int Graph::num_undirected_edges() const {
    int c = 0;
    for (const auto& s : neighbors_) c += static_cast<int>(s.size());
    return c / 2;
}

bool Graph::all_edges_directed() const {
    for (const auto& s : neighbors_)
        if (!s.empty()) return false;
    return true;
}

bool Graph::has_directed_cycle() const {
    // Kahn peeling over directed edges.
    const int p = num_nodes();
    std::vector<int> indeg(p, 0);
    for (int v = 0; v < p; ++v) indeg[v] = static_cast<int>(parents_[v].size());
    std::vector<int> stack;
    for (int v = 0; v < p; ++v)
        if (indeg[v] == 0) stack.push_back(v);
    int seen = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++seen;
        for (int c : children_[v])
            if (--indeg[c] == 0) stack.push_back(c);
    }
    return seen != p;
}

void Graph::set_weight(int a, int b, double w) {
    check_pair(a, b);
    if (!adjacent(a, b)) throw Error("cannot attach a weight to a missing edge");
    weights_[key(a, b)] = w;
}

std::optional<double> Graph::weight(int a, int b) const {
    check_pair(a, b);
    auto it = weights_.find(key(a, b));
    if (it == weights_.end()) return std::nullopt;
    return it->second;
}

bool Graph::operator==(const Graph& other) const {
    return names_ == other.names_ && parents_ == other.parents_ &&
           neighbors_ == other.neighbors_;
}

}  // namespace causalkit
