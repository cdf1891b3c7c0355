#include "topclose/bfs_cut.hpp"

#include <algorithm>
#include <stdexcept>

#include "topclose/bounds.hpp"

namespace topclose {

namespace {
constexpr std::uint32_t kUnreached = static_cast<std::uint32_t>(-1);
}

void Threshold::raise(double value) {
    const double current = value_.load(std::memory_order_relaxed);
    if (value < current) {
        throw std::logic_error("threshold must not decrease");
    }
    value_.store(value, std::memory_order_release);
}

BfsCutter::BfsCutter(const Graph &g, const ReachabilityBounds &bounds)
    : graph_(g), bounds_(bounds), distance_(g.node_count(), kUnreached) {
    queue_.reserve(g.node_count());
}

CutOutcome BfsCutter::run(Vertex source, const Threshold &threshold, const BoundObserver *observer) {
    const Count n = graph_.node_count();
    const bool exact = bounds_.exact(source);
    const Count alpha = bounds_.alpha[source];
    const Count omega = bounds_.omega[source];
    const bool undirected = !graph_.directed();

    CutOutcome out;
    queue_.clear();
    queue_.push_back(source);
    distance_[source] = 0;

    std::uint32_t level = 0;
    Count farness = 0;
    Count ball = 0;
    Count gamma_next = 0; // sum over the current frontier only

    for (std::size_t head = 0; head < queue_.size(); ++head) {
        const Vertex u = queue_[head];
        const std::uint32_t du = distance_[u];
        if (du > level) {
            const double x = threshold.load();
            double bound = kNoBound;
            bool cut = false;
            if (exact) {
                bound = closeness_upper_bound(farness_lower_bound(level, farness, ball, gamma_next, alpha), alpha, n);
                cut = bound <= x;
            } else {
                const double inverse =
                    inverse_closeness_lower_bound(level, farness, ball, gamma_next, alpha, omega, n);
                if (inverse > 0.0) {
                    bound = 1.0 / inverse;
                }
                cut = x > 0.0 && inverse >= 1.0 / x;
            }
            if (observer != nullptr) {
                (*observer)(BoundEvaluation{source, level, farness, ball, gamma_next, bound, x, cut});
            }
            if (cut) {
                out.cut = true;
                out.level = level;
                break;
            }
            level = du;
            gamma_next = 0;
        }
        farness += du;
        ++ball;
        const Count deg = graph_.degree(u);
        // in an undirected graph one edge of a non-root vertex leads back a level
        gamma_next += (undirected && du > 0) ? deg - 1 : deg;
        out.arcs_traversed += deg;
        for (Vertex w : graph_.neighbors(u)) {
            if (distance_[w] == kUnreached) {
                distance_[w] = du + 1;
                queue_.push_back(w);
            }
        }
    }

    for (Vertex w : queue_) {
        distance_[w] = kUnreached;
    }

    if (!out.cut) {
        out.farness = farness;
        out.reachable = ball;
        out.level = level;
        out.closeness = closeness(ball, farness, n);
    }
    return out;
}

CutOutcome bfs_cut(const Graph &g, Vertex source, const Threshold &threshold, const ReachabilityBounds &bounds) {
    BfsCutter cutter(g, bounds);
    return cutter.run(source, threshold);
}

} // namespace topclose
