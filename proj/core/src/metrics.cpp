#include "topclose/metrics.hpp"

namespace topclose {

Metrics metrics(Count visited_arcs, std::optional<Count> textbook_arcs, Count arc_count, Count node_count) noexcept {
    Metrics out;
    if (textbook_arcs && *textbook_arcs > 0) {
        out.improvement_factor = static_cast<double>(visited_arcs) / static_cast<double>(*textbook_arcs);
    }
    const double budget = static_cast<double>(arc_count) * static_cast<double>(node_count);
    if (budget > 0.0) {
        out.performance_ratio = static_cast<double>(visited_arcs) / budget;
    }
    return out;
}

} // namespace topclose
