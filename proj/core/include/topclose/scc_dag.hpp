#pragma once

#include <span>
#include <vector>

#include "topclose/graph.hpp"

namespace topclose {

using SccId = std::uint32_t;

/// Weighted condensation DAG of a directed graph.
///
/// SCC ids are topological indices: every DAG arc (C, D) has C < D, so
/// iterating ids downwards visits the SCCs in reverse topological order.
class SccDag {
public:
    [[nodiscard]] std::size_t scc_count() const noexcept { return weight_.size(); }
    [[nodiscard]] SccId scc_of(Vertex v) const { return scc_of_[v]; }
    [[nodiscard]] std::span<const SccId> scc_of() const noexcept { return scc_of_; }
    /// w(C): number of member vertices.
    [[nodiscard]] Count weight(SccId c) const { return weight_[c]; }
    /// Smallest member vertex id.
    [[nodiscard]] Vertex representative(SccId c) const { return representative_[c]; }
    [[nodiscard]] std::size_t topo_index(SccId c) const noexcept { return c; }

    /// Deduplicated DAG successors, sorted ascending.
    [[nodiscard]] std::span<const SccId> successors(SccId c) const noexcept {
        return {targets_.data() + offsets_[c], targets_.data() + offsets_[c + 1]};
    }
    [[nodiscard]] std::size_t dag_arc_count() const noexcept { return targets_.size(); }

    friend SccDag compute_scc_dag(const Graph &g);

private:
    std::vector<SccId> scc_of_;
    std::vector<Count> weight_;
    std::vector<Vertex> representative_;
    std::vector<std::size_t> offsets_;
    std::vector<SccId> targets_;
};

/// Iterative Tarjan plus condensation. Linear in n + m.
/// Throws UsageError on undirected graphs.
SccDag compute_scc_dag(const Graph &g);

} // namespace topclose
