#include "topclose/bounds.hpp"

#include <algorithm>

namespace topclose {

double closeness(Count reachable, Count farness, Count node_count) noexcept {
    if (node_count <= 1 || reachable <= 1 || farness == 0) {
        return 0.0;
    }
    const auto r1 = static_cast<double>(reachable - 1);
    return r1 * r1 / (static_cast<double>(node_count - 1) * static_cast<double>(farness));
}

std::int64_t farness_lower_bound(std::uint32_t level, Count farness, Count ball_size, Count gamma_next,
                                 Count reachable_hypothesis) noexcept {
    const auto d2 = static_cast<std::int64_t>(level) + 2;
    const auto missing = static_cast<std::int64_t>(reachable_hypothesis) - static_cast<std::int64_t>(ball_size);
    return static_cast<std::int64_t>(farness) - static_cast<std::int64_t>(gamma_next) + d2 * missing;
}

double closeness_upper_bound(std::int64_t farness_bound, Count reachable, Count node_count) noexcept {
    if (farness_bound <= 0) {
        return kNoBound;
    }
    // same expression as closeness() so a tight bound compares equal to c(v)
    const auto r1 = static_cast<double>(reachable - 1);
    return r1 * r1 / (static_cast<double>(node_count - 1) * static_cast<double>(farness_bound));
}

double inverse_closeness_lower_bound(std::uint32_t level, Count farness, Count ball_size, Count gamma_next,
                                     Count alpha, Count omega, Count node_count) noexcept {
    auto term = [&](Count x) {
        const auto lambda = static_cast<double>(farness_lower_bound(level, farness, ball_size, gamma_next, x));
        const auto x1 = static_cast<double>(x - 1);
        return lambda / (x1 * x1);
    };
    return static_cast<double>(node_count - 1) * std::min(term(alpha), term(omega));
}

} // namespace topclose
