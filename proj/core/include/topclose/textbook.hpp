#pragma once

#include <vector>

#include "topclose/graph.hpp"
#include "topclose/top_k.hpp"

namespace topclose {

/// Exact closeness of every vertex by one full BFS per source.
struct ClosenessTable {
    std::vector<double> closeness;
    std::vector<Count> farness;
    std::vector<Count> reachable;
    Count textbook_arcs = 0; // m_tot: arcs traversed over all BFS runs
};

ClosenessTable exact_closeness_all(const Graph &g, unsigned workers = 1);

/// Ranks a table with the same order as top_k.
TopKResult rank_table(const Graph &g, const ClosenessTable &table, std::size_t k);

/// All-BFS baseline top-k. Throws UsageError when k == 0.
TopKResult top_k_textbook(const Graph &g, std::size_t k, unsigned workers = 1);

} // namespace topclose

namespace topclose {

/// True when both results hold the same closeness values in rank order, each
/// pair equal within `relative_tolerance`. Vertex identities are ignored:
/// exact ties may be broken differently.
bool same_closeness(const TopKResult &a, const TopKResult &b, double relative_tolerance = 1e-12);

} // namespace topclose
