#include <map>
#include <numeric>

#include <gtest/gtest.h>

#include "netprobe/error.hpp"
#include "netprobe/generators.hpp"
#include "netprobe/graph.hpp"

using namespace netprobe;

namespace {

bool all_degrees(const Graph& g, int d) {
    const auto v = g.degree_sequence().values;
    return std::all_of(v.begin(), v.end(), [d](int x) { return x == d; });
}

}  // namespace

TEST(Gnl, SizesAndConnectivity) {
    Rng rng{1};
    for (int rep = 0; rep < 20; ++rep) {
        const Graph g = generate_er_gnl(30, 87, rng);
        EXPECT_EQ(g.node_count(), 30);
        EXPECT_EQ(g.edge_count(), 87u);
        EXPECT_TRUE(is_connected(30, g.edges()));
    }
}

TEST(Gnl, ForcedCases) {
    Rng rng{2};
    EXPECT_EQ(generate_er_gnl(3, 3, rng), make_complete(3));
    EXPECT_EQ(generate_er_gnl(4, 6, rng), make_complete(4));
    EXPECT_THROW(generate_er_gnl(4, 2, rng), InvalidArgument);
    EXPECT_THROW(generate_er_gnl(4, 7, rng), InvalidArgument);
}

// Every labelled connected graph on 4 nodes with 4 edges must be reachable:
// 3 four-cycles and 12 triangles with a pendant, uniformly.
TEST(Gnl, SupportOnFourNodes) {
    std::map<std::vector<Edge>, int> seen;
    int cycles = 0;
    const int draws = 3000;
    for (int s = 0; s < draws; ++s) {
        Rng rng{static_cast<std::uint64_t>(s)};
        const Graph g = generate_er_gnl(4, 4, rng);
        ++seen[{g.edges().begin(), g.edges().end()}];
        if (all_degrees(g, 2)) ++cycles;
    }
    EXPECT_EQ(seen.size(), 15u);
    EXPECT_NEAR(static_cast<double>(cycles) / draws, 0.2, 0.04);
}

TEST(Gnp, ForcedCases) {
    Rng rng{3};
    EXPECT_EQ(generate_er_gnp(6, 1.0, rng), make_complete(6));
    EXPECT_EQ(generate_er_gnp(2, 0.5, rng), make_path(2));
    EXPECT_THROW(generate_er_gnp(5, 0.0, rng), InvalidArgument);
    EXPECT_THROW(generate_er_gnp(5, 1.5, rng), InvalidArgument);
}

TEST(Gnp, MeanEdgeCount) {
    Rng rng{4};
    double total = 0.0;
    const int draws = 400;
    for (int rep = 0; rep < draws; ++rep) total += static_cast<double>(generate_er_gnp(30, 0.2, rng).edge_count());
    EXPECT_NEAR(total / draws, 87.0, 2.0);
}

TEST(Ba, EdgeCount) {
    Rng rng{5};
    for (int k = 1; k <= 3; ++k) {
        const Graph g = generate_ba(30, k, rng);
        EXPECT_EQ(g.edge_count(), static_cast<std::size_t>(3 + k * 27));
        EXPECT_TRUE(is_connected(30, g.edges()));
    }
    EXPECT_EQ(generate_ba(3, 2, rng), make_complete(3));
    EXPECT_THROW(generate_ba(10, 4, rng), InvalidArgument);
}

TEST(Ws, NoRewiringIsCirculant) {
    Rng rng{6};
    const Graph g = generate_ws(30, 2, 0.0, rng);
    EXPECT_EQ(g, make_circulant(30, 2));
    EXPECT_TRUE(all_degrees(g, 4));
}

TEST(Ws, RewiringKeepsEdgeCount) {
    Rng rng{7};
    for (int rep = 0; rep < 20; ++rep) {
        const Graph g = generate_ws(30, 2, 0.2, rng);
        EXPECT_EQ(g.edge_count(), 60u);
        EXPECT_TRUE(is_connected(30, g.edges()));
    }
    EXPECT_EQ(generate_ws(12, 3, 1.0, rng).edge_count(), 36u);
}

TEST(Tree, Shape) {
    Rng rng{8};
    for (int rep = 0; rep < 20; ++rep) {
        const Graph g = generate_tree(30, rng);
        EXPECT_EQ(g.edge_count(), 29u);  // connected with N-1 edges, hence acyclic
    }
    EXPECT_EQ(generate_tree(2, rng), make_path(2));
}

TEST(Tree, PruferStar) {
    const std::vector<int> seq{0, 0};
    EXPECT_EQ(prufer_decode(4, seq), make_star(4));
}

TEST(Tree, PruferPath) {
    // sequence [1, 2] on 4 nodes: 0-1, 1-2, 2-3
    const std::vector<int> seq{1, 2};
    EXPECT_EQ(prufer_decode(4, seq), make_path(4));
    const std::vector<int> bad{4, 0};
    EXPECT_THROW(prufer_decode(4, bad), InvalidArgument);
}

TEST(Regular, Degrees) {
    Rng rng{9};
    for (int rep = 0; rep < 20; ++rep) {
        const Graph g = generate_regular(30, 4, rng);
        EXPECT_TRUE(all_degrees(g, 4));
        EXPECT_EQ(g.edge_count(), 60u);
    }
    EXPECT_THROW(generate_regular(7, 3, rng), InvalidArgument);
}

TEST(Deterministic, Families) {
    EXPECT_EQ(make_path(5).edge_count(), 4u);
    EXPECT_TRUE(all_degrees(make_cycle(6), 2));
    EXPECT_TRUE(all_degrees(make_complete(5), 4));
    EXPECT_TRUE(all_degrees(make_circulant(30, 2), 4));
    EXPECT_EQ(make_star(5).degree_sequence().values, (std::vector<int>{4, 1, 1, 1, 1}));
}

TEST(Generators, SameSeedSameGraph) {
    Rng a{42}, b{42};
    EXPECT_EQ(generate_er_gnl(20, 40, a), generate_er_gnl(20, 40, b));
    EXPECT_EQ(generate_ba(20, 2, a), generate_ba(20, 2, b));
    EXPECT_EQ(generate_ws(20, 2, 0.3, a), generate_ws(20, 2, 0.3, b));
}

TEST(Seeds, DerivedStreamsDiffer) {
    EXPECT_NE(derive_seed(1, {0}), derive_seed(1, {1}));
    EXPECT_NE(derive_seed(1, {0}), derive_seed(2, {0}));
    EXPECT_NE(derive_seed(1, {0, 1}), derive_seed(1, {1, 0}));
    EXPECT_EQ(derive_seed(5, {3, 4}), derive_seed(5, {3, 4}));
}
