#include "topclose/components.hpp"

namespace topclose {

ComponentMap connected_components(const Graph &g) {
    if (g.directed()) {
        throw UsageError("connected_components requires an undirected graph");
    }
    constexpr auto kUnset = static_cast<std::uint32_t>(-1);
    ComponentMap map;
    map.component_of.assign(g.node_count(), kUnset);
    std::vector<Vertex> queue;
    queue.reserve(g.node_count());
    for (Vertex root = 0; root < g.node_count(); ++root) {
        if (map.component_of[root] != kUnset) {
            continue;
        }
        const auto id = static_cast<std::uint32_t>(map.component_size.size());
        queue.clear();
        queue.push_back(root);
        map.component_of[root] = id;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            for (Vertex w : g.neighbors(queue[head])) {
                if (map.component_of[w] == kUnset) {
                    map.component_of[w] = id;
                    queue.push_back(w);
                }
            }
        }
        map.component_size.push_back(queue.size());
    }
    return map;
}

} // namespace topclose
