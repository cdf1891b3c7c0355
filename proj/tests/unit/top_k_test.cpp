#include <gtest/gtest.h>

#include <mutex>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "suite.hpp"
#include "topclose/textbook.hpp"
#include "topclose/top_k.hpp"

using namespace topclose;

namespace {

void expect_matches_oracle(const Graph &g, const TopKResult &result, std::size_t k, const std::string &name) {
    const auto ref = oracle::closeness(g);
    const auto expected = oracle::top_values(ref.value, k);
    ASSERT_EQ(result.entries.size(), expected.size()) << name;
    for (std::size_t i = 0; i < expected.size(); ++i) {
        const auto &e = result.entries[i];
        ASSERT_TRUE(oracle::close_relative(e.closeness, expected[i])) << name << " rank " << i;
        EXPECT_EQ(e.rank, i + 1);
        EXPECT_TRUE(oracle::close_relative(e.closeness, ref.value[e.vertex])) << name;
        EXPECT_EQ(e.farness, ref.farness[e.vertex]) << name;
        EXPECT_EQ(e.reachable, ref.reachable[e.vertex]) << name;
        if (i > 0) {
            const auto &p = result.entries[i - 1];
            EXPECT_TRUE(p.closeness > e.closeness || (p.closeness == e.closeness && p.vertex < e.vertex));
        }
    }
}

Graph relabel(const Graph &g, std::uint64_t seed) {
    std::vector<Vertex> perm(g.node_count());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), std::mt19937_64(seed));
    std::vector<Graph::Arc> arcs;
    for (const auto &[u, v] : g.arcs()) arcs.emplace_back(perm[u], perm[v]);
    return Graph::from_arcs(g.node_count(), std::move(arcs), g.directed());
}

} // namespace

TEST(TopK, UndirectedPathMiddleWins) {
    const TopKRun run = top_k(path(3), 1);
    ASSERT_EQ(run.result.entries.size(), 1u);
    EXPECT_EQ(run.result.entries[0].vertex, 1u);
    EXPECT_DOUBLE_EQ(run.result.entries[0].closeness, 1.0);
    EXPECT_EQ(run.result.entries[0].farness, 2u);
    EXPECT_EQ(run.result.entries[0].reachable, 3u);
}

TEST(TopK, ThreeCycleTiesBrokenById) {
    const TopKRun run = top_k(cycle(3, true), 3);
    ASSERT_EQ(run.result.entries.size(), 3u);
    for (Vertex v = 0; v < 3; ++v) {
        EXPECT_EQ(run.result.entries[v].vertex, v);
        EXPECT_DOUBLE_EQ(run.result.entries[v].closeness, 2.0 / 3.0);
    }
}

TEST(TopK, RandomDigraphMatchesOracle) {
    const Graph g = gnp(150, 0.03, true, 42);
    expect_matches_oracle(g, top_k(g, 10).result, 10, "gnp(150,0.03)");
}

TEST(TopK, KLargerThanNReturnsEverything) {
    const Graph g = star(5);
    const TopKRun run = top_k(g, 50);
    EXPECT_EQ(run.result.entries.size(), 5u);
    EXPECT_EQ(run.result.k, 50u);
}

TEST(TopK, EmptyAndSingletonGraphs) {
    EXPECT_TRUE(top_k(Graph::from_arcs(0, {}, false), 3).result.entries.empty());
    const TopKRun one = top_k(Graph::from_arcs(1, {}, true), 3);
    ASSERT_EQ(one.result.entries.size(), 1u);
    EXPECT_EQ(one.result.entries[0].closeness, 0.0);
    EXPECT_EQ(one.stats.skipped_count, 1u);
}

TEST(TopK, InvalidArgumentsThrow) {
    EXPECT_THROW(top_k(path(3), 0), UsageError);
    EXPECT_THROW(top_k(path(3), 1, 0), UsageError);
}

TEST(TopK, DegreeOrderBreaksTiesById) {
    const Graph g = Graph::from_arcs(5, {{3, 0}, {3, 1}, {4, 2}, {4, 0}, {1, 2}}, false);
    EXPECT_EQ(degree_order(g), (std::vector<Vertex>{0, 1, 2, 3, 4}));
    const Graph s = star(4);
    EXPECT_EQ(degree_order(s).front(), 0u);
}

TEST(TopK, SoundOnRandomSuite) {
    const auto suite = fixtures::full_suite();
    ASSERT_GE(suite.size(), 200u);
    for (const auto &inst : suite) {
        const Graph &g = inst.graph;
        const auto ref = oracle::closeness(g);
        for (std::size_t k : {std::size_t{1}, std::size_t{5}, std::size_t{10}}) {
            const TopKRun run = top_k(g, k);
            expect_matches_oracle(g, run.result, k, inst.name);
            for (Vertex v = 0; v < g.node_count(); ++v) {
                if (run.stats.status[v] == VisitStatus::cut) {
                    ASSERT_LE(ref.value[v], run.stats.final_threshold) << inst.name << " vertex " << v;
                }
            }
            EXPECT_LE(run.stats.visited_arcs, ref.textbook_arcs) << inst.name;
            EXPECT_EQ(run.stats.cut_count + run.stats.completed_count + run.stats.skipped_count, g.node_count());
        }
    }
}

TEST(TopK, ThresholdZeroCompletenessWithKEqualN) {
    for (const auto &inst : fixtures::special_suite()) {
        const Graph &g = inst.graph;
        const auto ref = oracle::closeness(g);
        const TopKRun run = top_k(g, std::max<std::size_t>(1, g.node_count()));
        EXPECT_EQ(run.stats.cut_count, 0u) << inst.name;
        expect_matches_oracle(g, run.result, g.node_count(), inst.name);
    }
}

TEST(TopK, TextbookArcsKnownForUndirectedAndStronglyConnected) {
    const Graph u = gnp(90, 0.03, false, 8);
    EXPECT_EQ(top_k(u, 3).stats.textbook_arcs, oracle::closeness(u).textbook_arcs);
    const Graph c = cycle(12, true);
    EXPECT_EQ(top_k(c, 3).stats.textbook_arcs, Count{12 * 12});
    EXPECT_FALSE(top_k(path(5, true), 2).stats.textbook_arcs.has_value());
}

TEST(TopK, ParallelWorkersAgree) {
    for (bool directed : {false, true}) {
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            const Graph g = gnp(200, 0.03, directed, seed);
            const TopKRun serial = top_k(g, 10, 1);
            for (unsigned w : {2u, 4u, 8u}) {
                const TopKRun par = top_k(g, 10, w);
                EXPECT_TRUE(same_closeness(serial.result, par.result)) << "workers " << w;
            }
        }
    }
}

TEST(TopK, MonotoneThresholdUnderObservation) {
    const Graph g = gnp(150, 0.04, true, 17);
    TopKOptions opt;
    opt.k = 5;
    opt.workers = 4;
    std::mutex m;
    std::vector<double> seen;
    opt.observer = [&](const BoundEvaluation &e) {
        std::lock_guard lock(m);
        seen.push_back(e.threshold);
    };
    const TopKRun run = top_k(g, opt);
    for (double x : seen) EXPECT_LE(x, run.stats.final_threshold);
}

TEST(TopK, RelabellingAndLargerKPreserveRankingPrefix) {
    for (bool directed : {false, true}) {
        const Graph g = gnp(120, 0.04, directed, 3);
        const auto base = closeness_values(top_k(g, 10).result);
        const auto shuffled = closeness_values(top_k(relabel(g, 77), 10).result);
        const auto wider = closeness_values(top_k(g, 25).result);
        ASSERT_EQ(base.size(), 10u);
        for (std::size_t i = 0; i < base.size(); ++i) {
            EXPECT_TRUE(oracle::close_relative(base[i], shuffled[i]));
            EXPECT_TRUE(oracle::close_relative(base[i], wider[i]));
        }
    }
}

TEST(TopK, StarPrunesEveryLeafAtFirstBoundary) {
    const Graph g = star(10000);
    const TopKRun run = top_k(g, 1);
    EXPECT_EQ(run.result.entries[0].vertex, 0u);
    EXPECT_EQ(run.stats.cut_count, 9999u);
    // centre traverses 2(n-1) arcs, each leaf one
    EXPECT_EQ(run.stats.visited_arcs, Count{2 * 9999 + 9999});
}
