#pragma once

#include <vector>

#include "topclose/graph.hpp"
#include "topclose/scc_dag.hpp"

namespace topclose {

/// Per-vertex bounds alpha(v) <= r(v) <= omega(v) on the reachable count,
/// r(v) including v itself. A vertex is exact when alpha == omega.
struct ReachabilityBounds {
    std::vector<Count> alpha;
    std::vector<Count> omega;

    [[nodiscard]] std::size_t size() const noexcept { return alpha.size(); }
    [[nodiscard]] bool exact(Vertex v) const { return alpha[v] == omega[v]; }
    /// r(v); only meaningful when exact(v).
    [[nodiscard]] Count reachable(Vertex v) const { return alpha[v]; }
    [[nodiscard]] bool all_exact() const;
};

/// Options for compute_alpha_omega; the exactification pass is on by default.
struct AlphaOmegaOptions {
    bool refine_with_largest_scc = true;
};

/// Dynamic program over the condensation in reverse topological order:
///   alpha(C) = w(C) + max over successors alpha(D)
///   omega(C) = min(n, w(C) + sum over successors omega(D))
/// followed, unless disabled, by one BFS from the largest SCC (ties: smallest
/// member id) that makes that SCC exact and tightens every SCC reaching it.
ReachabilityBounds compute_alpha_omega(const SccDag &dag, const Graph &g,
                                       AlphaOmegaOptions options = {});

/// Undirected: exact r(v) from connected components. Directed with one SCC:
/// r(v) = n. Otherwise compute_alpha_omega.
ReachabilityBounds reachability_for(const Graph &g);

} // namespace topclose
