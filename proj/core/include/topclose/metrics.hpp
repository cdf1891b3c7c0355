#pragma once

#include <optional>

#include "topclose/graph.hpp"

namespace topclose {

/// Evaluation ratios; nullopt marks an undefined metric (zero denominator).
struct Metrics {
    std::optional<double> improvement_factor; // m_vis / m_tot
    std::optional<double> performance_ratio;  // m_vis / (m * n)
};

Metrics metrics(Count visited_arcs, std::optional<Count> textbook_arcs, Count arc_count, Count node_count) noexcept;

} // namespace topclose
