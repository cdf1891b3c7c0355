#pragma once

#include <atomic>
#include <cstddef>
#include <utility>
#include <vector>

#include "topclose/graph.hpp"

namespace topclose {

/// The running k-th best closeness x_k. Starts at 0 and only rises; readers
/// never lock, so a worker may act on a slightly stale (smaller) value.
class Threshold {
public:
    Threshold() = default;
    explicit Threshold(double initial) : value_(initial) {}

    [[nodiscard]] double load() const noexcept { return value_.load(std::memory_order_acquire); }

    /// Publishes a new value. Must not be smaller than the current one.
    void raise(double value);

private:
    std::atomic<double> value_{0.0};
};

/// Bounded min-heap keeping the k best (closeness, vertex) pairs under the
/// ranking order: closeness descending, then vertex id ascending.
class TopKQueue {
public:
    using Entry = std::pair<double, Vertex>;

    explicit TopKQueue(std::size_t k);

    /// Returns true if the entry was kept.
    bool offer(double closeness, Vertex v);

    /// Minimum retained closeness once k entries are held, 0 before that.
    [[nodiscard]] double threshold() const noexcept;

    [[nodiscard]] bool full() const noexcept { return heap_.size() == k_; }
    [[nodiscard]] std::size_t size() const noexcept { return heap_.size(); }
    [[nodiscard]] std::size_t capacity() const noexcept { return k_; }

    /// Retained entries, best first.
    [[nodiscard]] std::vector<Entry> sorted() const;

    /// True if a ranks strictly before b.
    static bool ranks_before(const Entry &a, const Entry &b) noexcept {
        return a.first > b.first || (a.first == b.first && a.second < b.second);
    }

private:
    std::size_t k_;
    std::vector<Entry> heap_; // root is the worst retained entry
};

} // namespace topclose
