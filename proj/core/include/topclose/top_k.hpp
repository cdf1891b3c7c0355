#pragma once

#include <optional>
#include <string>
#include <vector>

#include "topclose/bfs_cut.hpp"
#include "topclose/graph.hpp"
#include "topclose/reachability.hpp"

namespace topclose {

struct TopKEntry {
    std::size_t rank = 0; // 1-based
    Vertex vertex = 0;
    std::string label;
    double closeness = 0.0;
    Count farness = 0;
    Count reachable = 0;

    friend bool operator==(const TopKEntry &, const TopKEntry &) = default;
};

/// Ranked output: closeness descending, ties by vertex id ascending.
struct TopKResult {
    std::size_t k = 0;
    std::vector<TopKEntry> entries;

    friend bool operator==(const TopKResult &, const TopKResult &) = default;
};

/// Closeness values of a result in rank order.
std::vector<double> closeness_values(const TopKResult &result);

enum class VisitStatus : std::uint8_t {
    skipped,   // r(v) = 1, closeness 0 without a visit
    cut,       // pruned: c(v) <= x_k when the cut fired
    completed, // exact closeness computed
};

struct RunStats {
    Count visited_arcs = 0;                 // m_vis
    std::optional<Count> textbook_arcs;     // m_tot, when cheaply known
    std::vector<VisitStatus> status;        // per vertex
    std::vector<std::uint32_t> cut_level;   // per vertex; boundary level for cuts
    std::size_t cut_count = 0;
    std::size_t completed_count = 0;
    std::size_t skipped_count = 0;
    double preprocessing_seconds = 0.0;
    double total_seconds = 0.0;
    double final_threshold = 0.0;           // x_k at the end of the run
};

struct TopKOptions {
    std::size_t k = 10;
    unsigned workers = 1;
    /// Called at every level boundary of every visit (instrumented mode).
    BoundObserver observer;
};

struct TopKRun {
    TopKResult result;
    RunStats stats;
};

/// Exact top-k closeness with pruned visits.
///
/// Vertices are processed by decreasing degree (out-degree when directed,
/// ties by id). Each visit is cut once its closeness bound drops to the
/// current k-th best value. With workers > 1 vertices are handed out through
/// a shared cursor and the k-th best value is published under a mutex.
/// Throws UsageError when k == 0 or workers == 0.
TopKRun top_k(const Graph &g, const TopKOptions &options);
TopKRun top_k(const Graph &g, std::size_t k, unsigned workers = 1);

/// The processing order used by top_k.
std::vector<Vertex> degree_order(const Graph &g);

/// Arcs a full BFS from every vertex would traverse, when it can be derived
/// from exact reachability (undirected, or a single SCC). nullopt otherwise.
std::optional<Count> textbook_arc_count(const Graph &g);

} // namespace topclose
