#pragma once

#include <cstdint>
#include <limits>

#include "topclose/graph.hpp"

namespace topclose {

inline constexpr double kNoBound = std::numeric_limits<double>::infinity();

/// Closeness c(v) = (r-1)^2 / ((n-1) f). Zero when n <= 1 or r <= 1.
double closeness(Count reachable, Count farness, Count node_count) noexcept;

/// Lower bound on the farness of v once the ball of radius `level` is fully
/// dequeued, assuming x vertices are reachable:
///   f_d - gamma_next + (d + 2)(x - n_d).
/// `gamma_next` bounds the size of the next frontier. May be negative.
std::int64_t farness_lower_bound(std::uint32_t level, Count farness, Count ball_size,
                                 Count gamma_next, Count reachable_hypothesis) noexcept;

/// Upper bound on closeness from a farness lower bound and the exact r(v).
/// Returns kNoBound when the farness bound is not positive.
double closeness_upper_bound(std::int64_t farness_bound, Count reachable, Count node_count) noexcept;

/// Lower bound on 1/c(v) when only alpha(v) <= r(v) <= omega(v) is known:
///   (n-1) * min(lambda(alpha)/(alpha-1)^2, lambda(omega)/(omega-1)^2).
/// Over [alpha, omega] the per-x bound has no interior minimum, so the two
/// endpoints suffice. Requires 2 <= alpha <= omega. May be non-positive.
double inverse_closeness_lower_bound(std::uint32_t level, Count farness, Count ball_size,
                                     Count gamma_next, Count alpha, Count omega,
                                     Count node_count) noexcept;

} // namespace topclose
