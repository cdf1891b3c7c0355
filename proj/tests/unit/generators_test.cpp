#include <gtest/gtest.h>

#include <algorithm>

#include "topclose/generators.hpp"

using namespace topclose;

TEST(Generators, PathOfThree) {
    const Graph g = path(3);
    EXPECT_EQ(g.arcs(), (std::vector<Graph::Arc>{{0, 1}, {1, 2}}));
}

TEST(Generators, StarAndCycleShapes) {
    const Graph s = star(5);
    EXPECT_EQ(s.degree(0), 4u);
    EXPECT_EQ(s.edge_count(), 4u);
    const Graph c = cycle(4, true);
    for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(c.degree(v), 1u);
    EXPECT_EQ(cycle(1).arc_count(), 0u);
    EXPECT_EQ(cycle(2).edge_count(), 1u);
}

TEST(Generators, GnpIsDeterministicPerSeed) {
    const Graph a = gnp(150, 0.03, true, 42);
    const Graph b = gnp(150, 0.03, true, 42);
    const Graph c = gnp(150, 0.03, true, 43);
    EXPECT_EQ(a.arcs(), b.arcs());
    EXPECT_NE(a.arcs(), c.arcs());
}

TEST(Generators, GnpDensityIsPlausible) {
    const Graph g = gnp(400, 0.05, false, 1);
    const double expected = 0.05 * 400 * 399 / 2;
    EXPECT_NEAR(static_cast<double>(g.edge_count()), expected, 0.1 * expected);
    EXPECT_EQ(gnp(30, 0.0, true, 1).arc_count(), 0u);
    EXPECT_EQ(gnp(30, 1.0, true, 1).arc_count(), 30u * 29u);
}

TEST(Generators, PreferentialAttachmentIsHeavyTailed) {
    const Graph g = preferential_attachment(5000, 4, false, 7);
    Count max_degree = 0;
    for (Vertex v = 0; v < g.node_count(); ++v) max_degree = std::max(max_degree, g.degree(v));
    const double mean = static_cast<double>(g.arc_count()) / static_cast<double>(g.node_count());
    EXPECT_GT(static_cast<double>(max_degree), 10 * mean);
    EXPECT_EQ(g.edge_count(), 10u + 4u * (5000u - 5u));
}

TEST(Generators, InvalidParametersThrow) {
    EXPECT_THROW(gnp(10, 1.5, false, 0), UsageError);
    EXPECT_THROW(gnp(10, -0.1, false, 0), UsageError);
    EXPECT_THROW(preferential_attachment(10, 0, false, 0), UsageError);
    EXPECT_THROW(disjoint_union(path(2, true), path(2, false)), UsageError);
}

TEST(Generators, ModelNamesRoundTrip) {
    for (Model m : {Model::gnp, Model::preferential_attachment, Model::path, Model::star, Model::cycle}) {
        EXPECT_EQ(parse_model(model_name(m)), m);
    }
    EXPECT_EQ(parse_model("pa"), Model::preferential_attachment);
    EXPECT_FALSE(parse_model("lattice"));
}
