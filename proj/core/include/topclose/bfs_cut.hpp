#pragma once

#include <functional>
#include <vector>

#include "topclose/graph.hpp"
#include "topclose/reachability.hpp"
#include "topclose/threshold.hpp"

namespace topclose {

/// Snapshot handed to a BoundObserver at every level boundary of a visit,
/// once the ball of radius `level` has been fully dequeued.
struct BoundEvaluation {
    Vertex source = 0;
    std::uint32_t level = 0;
    Count farness = 0;    // f_d
    Count ball_size = 0;  // n_d
    Count gamma_next = 0; // upper bound on the size of the next frontier
    /// The engine's closeness upper bound at this boundary (kNoBound when
    /// the bound is unusable). For vertices with inexact reachability this is
    /// the reciprocal of the inverse-closeness lower bound.
    double closeness_bound = 0.0;
    double threshold = 0.0;
    bool cut = false;
};

/// Instrumentation hook. May be invoked concurrently from several workers.
using BoundObserver = std::function<void(const BoundEvaluation &)>;

struct CutOutcome {
    bool cut = false;
    double closeness = 0.0;   // exact c(v) when !cut
    Count farness = 0;        // exact f(v) when !cut
    Count reachable = 0;      // exact r(v) when !cut
    std::uint32_t level = 0;  // boundary where the cut fired, or eccentricity
    Count arcs_traversed = 0;
};

/// Pruned BFS from one vertex with reusable O(n) scratch. One instance per
/// worker; the graph and bounds are shared read-only.
///
/// At every level boundary the visit evaluates an upper bound on c(v):
/// with exact r(v) it uses the farness lower bound directly, otherwise the
/// alpha/omega two-endpoint bound on 1/c(v). The visit stops as soon as the
/// bound is <= the threshold, which is re-read at each boundary.
class BfsCutter {
public:
    BfsCutter(const Graph &g, const ReachabilityBounds &bounds);

    CutOutcome run(Vertex source, const Threshold &threshold, const BoundObserver *observer = nullptr);

private:
    const Graph &graph_;
    const ReachabilityBounds &bounds_;
    std::vector<std::uint32_t> distance_;
    std::vector<Vertex> queue_;
};

/// Single-call convenience around BfsCutter.
CutOutcome bfs_cut(const Graph &g, Vertex source, const Threshold &threshold, const ReachabilityBounds &bounds);

} // namespace topclose
