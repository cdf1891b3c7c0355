#include "topclose/reachability.hpp"

#include <algorithm>

#include "topclose/components.hpp"

namespace topclose {

bool ReachabilityBounds::all_exact() const {
    return alpha == omega;
}

namespace {

SccId largest_scc(const SccDag &dag) {
    SccId best = 0;
    for (SccId c = 1; c < dag.scc_count(); ++c) {
        if (dag.weight(c) > dag.weight(best) ||
            (dag.weight(c) == dag.weight(best) && dag.representative(c) < dag.representative(best))) {
            best = c;
        }
    }
    return best;
}

} // namespace

ReachabilityBounds compute_alpha_omega(const SccDag &dag, const Graph &g, AlphaOmegaOptions options) {
    const Count n = g.node_count();
    const std::size_t l = dag.scc_count();
    std::vector<Count> alpha(l), omega(l);

    for (std::size_t i = l; i-- > 0;) {
        const auto c = static_cast<SccId>(i);
        Count longest = 0, sum = 0;
        for (SccId d : dag.successors(c)) {
            longest = std::max(longest, alpha[d]);
            sum = std::min(n, sum + omega[d]);
        }
        alpha[c] = dag.weight(c) + longest;
        omega[c] = std::min(n, dag.weight(c) + sum);
    }

    if (options.refine_with_largest_scc && l > 0) {
        const SccId big = largest_scc(dag);
        const Count big_reach = bfs(g, dag.representative(big)).visited;

        // SCCs reachable from the largest one; successors always have larger ids
        std::vector<bool> below(l, false);
        below[big] = true;
        for (std::size_t c = big; c < l; ++c) {
            if (below[c]) {
                for (SccId d : dag.successors(static_cast<SccId>(c))) {
                    below[d] = true;
                }
            }
        }

        alpha[big] = big_reach;
        omega[big] = big_reach;

        // Reduced program on the DAG without the sub-DAG below `big`. Any
        // reachable set of C splits into a part avoiding that sub-DAG and a
        // subset of R(big), so omega'(C) + r(big) bounds r(C) whenever C
        // enters the sub-DAG at all.
        std::vector<Count> reduced(l, 0);
        std::vector<bool> enters(l, false);
        for (std::size_t i = l; i-- > 0;) {
            const auto c = static_cast<SccId>(i);
            if (below[c]) {
                continue;
            }
            Count longest = 0, sum = 0;
            bool hits = false;
            for (SccId d : dag.successors(c)) {
                longest = std::max(longest, alpha[d]);
                if (below[d]) {
                    hits = true;
                } else {
                    sum = std::min(n, sum + reduced[d]);
                    hits = hits || enters[d];
                }
            }
            alpha[c] = std::max(alpha[c], dag.weight(c) + longest);
            reduced[c] = std::min(n, dag.weight(c) + sum);
            enters[c] = hits;
            const Count refined = std::min(n, reduced[c] + (hits ? big_reach : 0));
            omega[c] = std::min(omega[c], refined);
        }
    }

    ReachabilityBounds bounds;
    bounds.alpha.resize(n);
    bounds.omega.resize(n);
    for (Vertex v = 0; v < n; ++v) {
        bounds.alpha[v] = alpha[dag.scc_of(v)];
        bounds.omega[v] = omega[dag.scc_of(v)];
    }
    return bounds;
}

ReachabilityBounds reachability_for(const Graph &g) {
    const std::size_t n = g.node_count();
    ReachabilityBounds bounds;
    if (!g.directed()) {
        const ComponentMap comps = connected_components(g);
        bounds.alpha.resize(n);
        for (Vertex v = 0; v < n; ++v) {
            bounds.alpha[v] = comps.reachable(v);
        }
        bounds.omega = bounds.alpha;
        return bounds;
    }
    const SccDag dag = compute_scc_dag(g);
    if (dag.scc_count() <= 1) {
        bounds.alpha.assign(n, n);
        bounds.omega.assign(n, n);
        return bounds;
    }
    return compute_alpha_omega(dag, g);
}

} // namespace topclose
