#include "topclose/textbook.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

namespace topclose {

ClosenessTable exact_closeness_all(const Graph &g, unsigned workers) {
    const std::size_t n = g.node_count();
    ClosenessTable table;
    table.closeness.assign(n, 0.0);
    table.farness.assign(n, 0);
    table.reachable.assign(n, 0);
    std::vector<Count> arcs(n, 0);

    std::atomic<std::size_t> cursor{0};
    auto work = [&] {
        for (std::size_t v = cursor++; v < n; v = cursor++) {
            const BfsResult res = bfs(g, static_cast<Vertex>(v));
            table.farness[v] = res.farness;
            table.reachable[v] = res.visited;
            arcs[v] = res.arcs_traversed;
            if (n > 1 && res.visited > 1) {
                const double r1 = static_cast<double>(res.visited - 1);
                table.closeness[v] = r1 * r1 / (static_cast<double>(n - 1) * static_cast<double>(res.farness));
            }
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(work);
        }
    }
    for (Count a : arcs) {
        table.textbook_arcs += a;
    }
    return table;
}

TopKResult rank_table(const Graph &g, const ClosenessTable &table, std::size_t k) {
    if (k == 0) {
        throw UsageError("k must be at least 1");
    }
    std::vector<Vertex> order(g.node_count());
    for (Vertex v = 0; v < order.size(); ++v) {
        order[v] = v;
    }
    const std::size_t keep = std::min(k, order.size());
    std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(keep), order.end(),
                      [&](Vertex a, Vertex b) {
                          return table.closeness[a] > table.closeness[b] ||
                                 (table.closeness[a] == table.closeness[b] && a < b);
                      });
    TopKResult result;
    result.k = k;
    for (std::size_t i = 0; i < keep; ++i) {
        const Vertex v = order[i];
        result.entries.push_back(
            TopKEntry{i + 1, v, g.label(v), table.closeness[v], table.farness[v], table.reachable[v]});
    }
    return result;
}

TopKResult top_k_textbook(const Graph &g, std::size_t k, unsigned workers) {
    if (k == 0) {
        throw UsageError("k must be at least 1");
    }
    return rank_table(g, exact_closeness_all(g, workers), k);
}

} // namespace topclose

namespace topclose {

bool same_closeness(const TopKResult &a, const TopKResult &b, double relative_tolerance) {
    if (a.entries.size() != b.entries.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
        const double x = a.entries[i].closeness;
        const double y = b.entries[i].closeness;
        if (std::abs(x - y) > relative_tolerance * std::max(std::abs(x), std::abs(y))) {
            return false;
        }
    }
    return true;
}

} // namespace topclose
