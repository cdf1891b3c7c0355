#include "topclose/graph.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace topclose {

Graph load_edge_list(std::istream &in, bool directed) {
    std::unordered_map<std::string, Vertex> ids;
    std::vector<std::string> labels;
    std::vector<Graph::Arc> arcs;

    auto intern = [&](std::string token) {
        auto [it, inserted] = ids.try_emplace(std::move(token), static_cast<Vertex>(labels.size()));
        if (inserted) {
            labels.push_back(it->first);
        }
        return it->second;
    };

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        std::istringstream fields(line);
        std::string a, b, extra;
        if (!(fields >> a >> b) || (fields >> extra)) {
            throw ParseError(line_no, "expected exactly two vertex tokens");
        }
        const Vertex u = intern(std::move(a));
        const Vertex v = intern(std::move(b));
        arcs.emplace_back(u, v);
    }
    if (in.bad()) {
        throw std::runtime_error("read error after line " + std::to_string(line_no));
    }
    const std::size_t n = labels.size();
    return Graph::from_arcs(n, std::move(arcs), directed, std::move(labels));
}

Graph load_edge_list_file(const std::string &path, bool directed) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    return load_edge_list(in, directed);
}

void write_edge_list(std::ostream &out, const Graph &g) {
    out << "# nodes " << g.node_count() << " arcs " << g.arc_count() << ' '
        << (g.directed() ? "directed" : "undirected") << '\n';
    std::vector<bool> touched(g.node_count(), false);
    for (Vertex u = 0; u < g.node_count(); ++u) {
        for (Vertex w : g.neighbors(u)) {
            touched[u] = true;
            touched[w] = true;
        }
    }
    for (Vertex u = 0; u < g.node_count(); ++u) {
        if (!touched[u]) {
            out << g.label(u) << ' ' << g.label(u) << '\n';
        }
        for (Vertex w : g.neighbors(u)) {
            if (g.directed() || u < w) {
                out << g.label(u) << ' ' << g.label(w) << '\n';
            }
        }
    }
}

} // namespace topclose
