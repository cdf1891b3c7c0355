#include "topclose/top_k.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>

#include "topclose/components.hpp"
#include "topclose/scc_dag.hpp"

namespace topclose {

TopKQueue::TopKQueue(std::size_t k) : k_(k) {
    heap_.reserve(k);
}

namespace {
// Heap comparator placing the worst-ranked entry at the root.
bool worse_on_top(const TopKQueue::Entry &a, const TopKQueue::Entry &b) {
    return TopKQueue::ranks_before(a, b);
}
} // namespace

bool TopKQueue::offer(double closeness, Vertex v) {
    const Entry e{closeness, v};
    if (heap_.size() < k_) {
        heap_.push_back(e);
        std::push_heap(heap_.begin(), heap_.end(), worse_on_top);
        return true;
    }
    if (k_ == 0 || !ranks_before(e, heap_.front())) {
        return false;
    }
    std::pop_heap(heap_.begin(), heap_.end(), worse_on_top);
    heap_.back() = e;
    std::push_heap(heap_.begin(), heap_.end(), worse_on_top);
    return true;
}

double TopKQueue::threshold() const noexcept {
    return full() && k_ > 0 ? heap_.front().first : 0.0;
}

std::vector<TopKQueue::Entry> TopKQueue::sorted() const {
    auto out = heap_;
    std::sort(out.begin(), out.end(), ranks_before);
    return out;
}

std::vector<double> closeness_values(const TopKResult &result) {
    std::vector<double> out;
    out.reserve(result.entries.size());
    for (const auto &e : result.entries) {
        out.push_back(e.closeness);
    }
    return out;
}

std::vector<Vertex> degree_order(const Graph &g) {
    std::vector<Vertex> order(g.node_count());
    for (Vertex v = 0; v < order.size(); ++v) {
        order[v] = v;
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    return order;
}

std::optional<Count> textbook_arc_count(const Graph &g) {
    const std::size_t n = g.node_count();
    if (!g.directed()) {
        const ComponentMap comps = connected_components(g);
        std::vector<Count> arcs(comps.component_count(), 0);
        for (Vertex v = 0; v < n; ++v) {
            arcs[comps.component_of[v]] += g.degree(v);
        }
        Count total = 0;
        for (std::size_t c = 0; c < arcs.size(); ++c) {
            total += comps.component_size[c] * arcs[c];
        }
        return total;
    }
    if (compute_scc_dag(g).scc_count() <= 1) {
        return g.arc_count() * n;
    }
    return std::nullopt;
}

TopKRun top_k(const Graph &g, std::size_t k, unsigned workers) {
    TopKOptions options;
    options.k = k;
    options.workers = workers;
    return top_k(g, options);
}

TopKRun top_k(const Graph &g, const TopKOptions &options) {
    if (options.k == 0) {
        throw UsageError("k must be at least 1");
    }
    if (options.workers == 0) {
        throw UsageError("workers must be at least 1");
    }
    using Clock = std::chrono::steady_clock;
    const auto start = Clock::now();
    const std::size_t n = g.node_count();

    const ReachabilityBounds bounds = reachability_for(g);
    const std::vector<Vertex> order = degree_order(g);
    const auto preprocessed = Clock::now();

    TopKRun run;
    RunStats &stats = run.stats;
    stats.status.assign(n, VisitStatus::skipped);
    stats.cut_level.assign(n, 0);
    std::vector<CutOutcome> outcomes(n);

    Threshold threshold;
    TopKQueue best(options.k);
    std::mutex best_mutex;
    std::atomic<std::size_t> cursor{0};
    const BoundObserver *observer = options.observer ? &options.observer : nullptr;

    auto worker = [&](Count &visited_arcs) {
        BfsCutter cutter(g, bounds);
        for (std::size_t i = cursor.fetch_add(1, std::memory_order_relaxed); i < n;
             i = cursor.fetch_add(1, std::memory_order_relaxed)) {
            const Vertex v = order[i];
            CutOutcome outcome;
            if (bounds.omega[v] <= 1) {
                outcome.reachable = 1;
                stats.status[v] = VisitStatus::skipped;
            } else {
                outcome = cutter.run(v, threshold, observer);
                visited_arcs += outcome.arcs_traversed;
                stats.status[v] = outcome.cut ? VisitStatus::cut : VisitStatus::completed;
                stats.cut_level[v] = outcome.level;
                if (outcome.cut) {
                    outcomes[v] = outcome;
                    continue;
                }
            }
            outcomes[v] = outcome;
            std::lock_guard lock(best_mutex);
            if (best.offer(outcome.closeness, v)) {
                threshold.raise(best.threshold());
            }
        }
    };

    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(options.workers, std::max<std::size_t>(n, 1)));
    std::vector<Count> arcs(workers, 0);
    if (workers == 1) {
        worker(arcs[0]);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(worker, std::ref(arcs[w]));
        }
    }

    for (Count a : arcs) {
        stats.visited_arcs += a;
    }
    for (VisitStatus s : stats.status) {
        switch (s) {
        case VisitStatus::skipped: ++stats.skipped_count; break;
        case VisitStatus::cut: ++stats.cut_count; break;
        case VisitStatus::completed: ++stats.completed_count; break;
        }
    }
    stats.final_threshold = threshold.load();

    run.result.k = options.k;
    std::size_t rank = 0;
    for (const auto &[c, v] : best.sorted()) {
        const CutOutcome &o = outcomes[v];
        run.result.entries.push_back(TopKEntry{++rank, v, g.label(v), c, o.farness, o.reachable});
    }

    stats.preprocessing_seconds = std::chrono::duration<double>(preprocessed - start).count();
    stats.total_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (!g.directed() || bounds.all_exact()) {
        stats.textbook_arcs = textbook_arc_count(g);
    }
    return run;
}

} // namespace topclose
