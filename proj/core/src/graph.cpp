#include "topclose/graph.hpp"

#include <algorithm>
#include <string>

namespace topclose {

ParseError::ParseError(std::size_t line, const std::string &what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

Graph Graph::from_arcs(std::size_t node_count, std::vector<Arc> arcs, bool directed,
                       std::vector<std::string> labels) {
    if (!labels.empty() && labels.size() != node_count) {
        throw UsageError("label count does not match node count");
    }
    for (const auto &[u, v] : arcs) {
        if (u >= node_count || v >= node_count) {
            throw UsageError("arc endpoint out of range");
        }
    }

    std::erase_if(arcs, [](const Arc &a) { return a.first == a.second; });
    if (!directed) {
        const std::size_t single = arcs.size();
        arcs.reserve(2 * single);
        for (std::size_t i = 0; i < single; ++i) {
            arcs.emplace_back(arcs[i].second, arcs[i].first);
        }
    }
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());

    Graph g;
    g.directed_ = directed;
    g.offsets_.assign(node_count + 1, 0);
    for (const auto &a : arcs) {
        ++g.offsets_[a.first + 1];
    }
    for (std::size_t v = 0; v < node_count; ++v) {
        g.offsets_[v + 1] += g.offsets_[v];
    }
    g.targets_.reserve(arcs.size());
    for (const auto &a : arcs) {
        g.targets_.push_back(a.second);
    }

    if (labels.empty()) {
        labels.reserve(node_count);
        for (std::size_t v = 0; v < node_count; ++v) {
            labels.push_back(std::to_string(v));
        }
    }
    g.labels_ = std::move(labels);
    return g;
}

std::vector<Graph::Arc> Graph::arcs() const {
    std::vector<Arc> out;
    out.reserve(directed_ ? targets_.size() : targets_.size() / 2);
    for (Vertex u = 0; u < node_count(); ++u) {
        for (Vertex w : neighbors(u)) {
            if (directed_ || u < w) {
                out.emplace_back(u, w);
            }
        }
    }
    return out;
}

BfsResult bfs(const Graph &g, Vertex source) {
    BfsResult res;
    res.distance.assign(g.node_count(), BfsResult::kUnreached);
    std::vector<Vertex> queue;
    queue.reserve(g.node_count());
    queue.push_back(source);
    res.distance[source] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex u = queue[head];
        const std::uint32_t du = res.distance[u];
        res.farness += du;
        res.arcs_traversed += g.degree(u);
        for (Vertex w : g.neighbors(u)) {
            if (res.distance[w] == BfsResult::kUnreached) {
                res.distance[w] = du + 1;
                queue.push_back(w);
            }
        }
    }
    res.visited = queue.size();
    return res;
}

} // namespace topclose
