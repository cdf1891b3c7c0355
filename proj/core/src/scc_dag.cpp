#include "topclose/scc_dag.hpp"

#include <algorithm>

namespace topclose {

namespace {

constexpr std::uint32_t kUnvisited = static_cast<std::uint32_t>(-1);

// Tarjan's algorithm with an explicit call stack. Components are emitted
// sinks first, i.e. in reverse topological order of the condensation.
std::vector<std::uint32_t> tarjan_reverse_topological(const Graph &g, std::uint32_t &count) {
    const std::size_t n = g.node_count();
    std::vector<std::uint32_t> index(n, kUnvisited);
    std::vector<std::uint32_t> low(n, 0);
    std::vector<std::uint32_t> component(n, kUnvisited);
    std::vector<Vertex> stack;
    struct Frame {
        Vertex v;
        std::size_t next; // position in neighbours
    };
    std::vector<Frame> calls;
    std::uint32_t counter = 0;
    count = 0;

    for (Vertex root = 0; root < n; ++root) {
        if (index[root] != kUnvisited) {
            continue;
        }
        index[root] = low[root] = counter++;
        stack.push_back(root);
        calls.push_back({root, 0});
        while (!calls.empty()) {
            Frame &frame = calls.back();
            const Vertex v = frame.v;
            const auto adj = g.neighbors(v);
            if (frame.next < adj.size()) {
                const Vertex w = adj[frame.next++];
                if (index[w] == kUnvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    calls.push_back({w, 0});
                } else if (component[w] == kUnvisited) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            if (low[v] == index[v]) {
                Vertex w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    component[w] = count;
                } while (w != v);
                ++count;
            }
            calls.pop_back();
            if (!calls.empty()) {
                const Vertex parent = calls.back().v;
                low[parent] = std::min(low[parent], low[v]);
            }
        }
    }
    return component;
}

} // namespace

SccDag compute_scc_dag(const Graph &g) {
    if (!g.directed()) {
        throw UsageError("compute_scc_dag requires a directed graph; use connected_components");
    }
    const std::size_t n = g.node_count();
    std::uint32_t count = 0;
    auto reverse_order = tarjan_reverse_topological(g, count);

    SccDag dag;
    dag.scc_of_.resize(n);
    dag.weight_.assign(count, 0);
    dag.representative_.assign(count, kNoVertex);
    for (Vertex v = 0; v < n; ++v) {
        const SccId c = count - 1 - reverse_order[v];
        dag.scc_of_[v] = c;
        ++dag.weight_[c];
        if (dag.representative_[c] == kNoVertex) {
            dag.representative_[c] = v;
        }
    }

    // members grouped by SCC, then one marker pass per SCC dedups DAG arcs
    std::vector<std::size_t> member_offsets(count + 1, 0);
    for (Vertex v = 0; v < n; ++v) {
        ++member_offsets[dag.scc_of_[v] + 1];
    }
    for (std::size_t c = 0; c < count; ++c) {
        member_offsets[c + 1] += member_offsets[c];
    }
    std::vector<Vertex> members(n);
    {
        auto fill = member_offsets;
        for (Vertex v = 0; v < n; ++v) {
            members[fill[dag.scc_of_[v]]++] = v;
        }
    }

    std::vector<SccId> last_source(count, kUnvisited);
    dag.offsets_.assign(count + 1, 0);
    for (SccId c = 0; c < count; ++c) {
        const std::size_t begin = dag.targets_.size();
        for (std::size_t i = member_offsets[c]; i < member_offsets[c + 1]; ++i) {
            for (Vertex w : g.neighbors(members[i])) {
                const SccId cw = dag.scc_of_[w];
                if (cw != c && last_source[cw] != c) {
                    last_source[cw] = c;
                    dag.targets_.push_back(cw);
                }
            }
        }
        std::sort(dag.targets_.begin() + static_cast<std::ptrdiff_t>(begin), dag.targets_.end());
        dag.offsets_[c + 1] = dag.targets_.size();
    }
    return dag;
}

} // namespace topclose
