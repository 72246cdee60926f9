#include "causalkit/graph_transforms.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <set>

#include "causalkit/errors.hpp"

namespace causalkit {

namespace {

// Orients every v-structure of dag into out (same skeleton assumed).
void copy_v_structures(const Graph& dag, Graph& out) {
    const int p = dag.num_nodes();
    for (int z = 0; z < p; ++z) {
        const auto& pa = dag.parents(z);
        for (auto ix = pa.begin(); ix != pa.end(); ++ix) {
            for (auto iy = std::next(ix); iy != pa.end(); ++iy) {
                if (!dag.adjacent(*ix, *iy)) {
                    out.set_directed(*ix, z);
                    out.set_directed(*iy, z);
                }
            }
        }
    }
}

bool rule1_applies(const Graph& g, int a, int b) {
    for (int z : g.parents(a))
        if (!g.adjacent(z, b)) return true;
    return false;
}

bool rule2_applies(const Graph& g, int a, int b) {
    for (int z : g.children(a))
        if (g.has_directed_edge(z, b)) return true;
    return false;
}

bool rule3_applies(const Graph& g, int a, int b) {
    std::vector<int> cands;
    for (int z : g.undirected_neighbors(a))
        if (g.has_directed_edge(z, b)) cands.push_back(z);
    for (size_t i = 0; i < cands.size(); ++i)
        for (size_t j = i + 1; j < cands.size(); ++j)
            if (!g.adjacent(cands[i], cands[j])) return true;
    return false;
}

bool rule4_applies(const Graph& g, int a, int b) {
    for (int c : g.undirected_neighbors(a)) {
        if (g.adjacent(c, b)) continue;
        for (int d : g.children(c))
            if (g.has_directed_edge(d, b)) return true;
    }
    return false;
}

}  // namespace

Graph meek_closure(Graph g) {
    const int p = g.num_nodes();
    bool changed = true;
    while (changed) {
        changed = false;
        for (int a = 0; a < p; ++a) {
            // snapshot: orienting mutates the neighbor set being walked
            std::vector<int> nbrs(g.undirected_neighbors(a).begin(),
                                  g.undirected_neighbors(a).end());
            for (int b : nbrs) {
                if (!g.has_undirected_edge(a, b)) continue;
                if (rule1_applies(g, a, b) || rule2_applies(g, a, b) ||
                    rule3_applies(g, a, b) || rule4_applies(g, a, b)) {
                    g.set_directed(a, b);
                    changed = true;
                }
            }
        }
    }
    return g;
}

Graph dag_to_cpdag(const Graph& g) {
    if (!g.all_edges_directed() || g.has_directed_cycle())
        throw CyclicInput("dag_to_cpdag: input must be a DAG");
    Graph skel(g.names());
    for (const Edge& e : g.edges()) skel.add_undirected_edge(e.from, e.to);
    copy_v_structures(g, skel);
    return meek_closure(std::move(skel));
}

Graph pdag_to_dag(const Graph& g) {
    const int p = g.num_nodes();
    Graph work = g;    // shrinking copy
    Graph out = g;     // receives orientations
    std::vector<bool> alive(p, true);
    int remaining = p;
    while (remaining > 0) {
        int found = -1;
        for (int x = 0; x < p && found < 0; ++x) {
            if (!alive[x]) continue;
            if (!work.children(x).empty()) continue;
            bool ok = true;
            std::set<int> adj = work.adjacencies(x);
            for (int w : work.undirected_neighbors(x)) {
                for (int z : adj) {
                    if (z == w) continue;
                    if (!work.adjacent(w, z)) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) break;
            }
            if (ok) found = x;
        }
        if (found < 0)
            throw NotExtendable("pdag_to_dag: no consistent extension exists");
        for (int w : std::set<int>(work.undirected_neighbors(found)))
            out.set_directed(w, found);
        for (int z : work.adjacencies(found)) work.remove_edge(found, z);
        alive[found] = false;
        --remaining;
    }
    return out;
}

bool d_separated(const Graph& g, int x, int y, const std::vector<int>& s) {
    if (!g.is_dag()) throw CyclicInput("d_separated: graph must be a DAG");
    const int p = g.num_nodes();
    if (x < 0 || x >= p || y < 0 || y >= p)
        throw NodeOutOfRange("d_separated: node index out of range");
    for (int v : s)
        if (v < 0 || v >= p) throw NodeOutOfRange("d_separated: conditioning index out of range");
    if (x == y) throw Error("d_separated: x and y must differ");
    std::vector<bool> in_s(p, false);
    for (int v : s) in_s[v] = true;
    if (in_s[x] || in_s[y]) throw Error("d_separated: x and y must not be conditioned on");

    // ancestors of S (including S)
    std::vector<bool> anc(p, false);
    std::deque<int> queue(s.begin(), s.end());
    for (int v : s) anc[v] = true;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int u : g.parents(v))
            if (!anc[u]) {
                anc[u] = true;
                queue.push_back(u);
            }
    }

    // reachability over (node, direction) states; direction FromChild means
    // we entered the node against an edge (or start fresh at x)
    enum { FromChild = 0, FromParent = 1 };
    std::vector<std::array<bool, 2>> visited(p, {false, false});
    std::deque<std::pair<int, int>> frontier;
    frontier.emplace_back(x, FromChild);
    while (!frontier.empty()) {
        auto [v, dir] = frontier.front();
        frontier.pop_front();
        if (visited[v][dir]) continue;
        visited[v][dir] = true;
        if (v == y) return false;
        if (dir == FromChild && !in_s[v]) {
            for (int u : g.parents(v)) frontier.emplace_back(u, FromChild);
            for (int u : g.children(v)) frontier.emplace_back(u, FromParent);
        } else if (dir == FromParent) {
            if (!in_s[v])
                for (int u : g.children(v)) frontier.emplace_back(u, FromParent);
            if (anc[v])
                for (int u : g.parents(v)) frontier.emplace_back(u, FromChild);
        }
    }
    return true;
}

std::vector<int> topological_order(const Graph& g) {
    if (!g.is_dag()) throw CyclicInput("topological_order: input must be a DAG");
    const int p = g.num_nodes();
    std::vector<int> indeg(p);
    for (int v = 0; v < p; ++v) indeg[v] = static_cast<int>(g.parents(v).size());
    std::set<int> ready;
    for (int v = 0; v < p; ++v)
        if (indeg[v] == 0) ready.insert(v);
    std::vector<int> order;
    order.reserve(p);
    while (!ready.empty()) {
        int v = *ready.begin();
        ready.erase(ready.begin());
        order.push_back(v);
        for (int c : g.children(v))
            if (--indeg[c] == 0) ready.insert(c);
    }
    return order;
}

}  // namespace causalkit
