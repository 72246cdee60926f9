#include "causalkit/graph_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "causalkit/errors.hpp"

namespace causalkit {

using nlohmann::json;

std::string graph_to_json(const Graph& g) {
    json nodes = json::array();
    for (const auto& n : g.names()) nodes.push_back(n);
    json edges = json::array();
    for (const Edge& e : g.edges()) {
        json je;
        je["from"] = g.name(e.from);
        je["to"] = g.name(e.to);
        je["type"] = e.kind == EdgeKind::Directed ? "directed" : "undirected";
        if (auto w = g.weight(e.from, e.to)) je["weight"] = *w;
        edges.push_back(je);
    }
    json root;
    root["nodes"] = nodes;
    root["edges"] = edges;
    return root.dump(2) + "\n";
}

Graph graph_from_json(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid graph JSON: ") + e.what(), 0, 0);
    }
    if (!root.is_object() || !root.contains("nodes") || !root.contains("edges"))
        throw ParseError("graph JSON must contain \"nodes\" and \"edges\"", 0, 0);
    std::vector<std::string> names;
    for (const auto& n : root["nodes"]) {
        if (!n.is_string()) throw ParseError("node names must be strings", 0, 0);
        names.push_back(n.get<std::string>());
    }
    Graph g(names);
    for (const auto& je : root["edges"]) {
        const std::string from = je.at("from").get<std::string>();
        const std::string to = je.at("to").get<std::string>();
        const std::string type = je.at("type").get<std::string>();
        int a = g.index_of(from);
        int b = g.index_of(to);
        if (a < 0 || b < 0)
            throw ParseError("edge references unknown node \"" + (a < 0 ? from : to) + "\"", 0, 0);
        if (type == "directed")
            g.add_directed_edge(a, b);
        else if (type == "undirected")
            g.add_undirected_edge(a, b);
        else
            throw ParseError("unknown edge type \"" + type + "\"", 0, 0);
        if (je.contains("weight")) g.set_weight(a, b, je["weight"].get<double>());
    }
    return g;
}

Graph load_graph_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open graph file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return graph_from_json(buf.str());
}

void save_graph_json(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write graph file: " + path);
    out << graph_to_json(g);
}

std::string graph_to_dot(const Graph& g) {
    std::ostringstream out;
    out << "digraph g {\n";
    for (const auto& n : g.names()) out << "  \"" << n << "\";\n";
    for (const Edge& e : g.edges()) {
        out << "  \"" << g.name(e.from) << "\" -> \"" << g.name(e.to) << "\"";
        if (e.kind == EdgeKind::Undirected) out << " [dir=none]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace causalkit
