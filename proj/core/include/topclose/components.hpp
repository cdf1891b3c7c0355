#pragma once

#include <vector>

#include "topclose/graph.hpp"

namespace topclose {

/// Connected components of an undirected graph.
struct ComponentMap {
    std::vector<std::uint32_t> component_of; // per vertex
    std::vector<Count> component_size;       // per component

    [[nodiscard]] std::size_t component_count() const noexcept { return component_size.size(); }
    /// Exact reachable count r(v) in an undirected graph.
    [[nodiscard]] Count reachable(Vertex v) const { return component_size[component_of[v]]; }
};

/// Linear-time labelling by repeated BFS. Throws UsageError on directed graphs.
ComponentMap connected_components(const Graph &g);

} // namespace topclose
