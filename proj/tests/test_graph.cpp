#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "netprobe/error.hpp"
#include "netprobe/generators.hpp"
#include "netprobe/graph.hpp"
#include "netprobe/graph_enum.hpp"
#include "netprobe/graph_io.hpp"

using namespace netprobe;

namespace {

Graph triangle() { return Graph::create(3, {{0, 1}, {1, 2}, {0, 2}}); }

}  // namespace

TEST(Graph, NormalizesEdges) {
    const Graph g = Graph::create(3, {{2, 1}, {1, 0}});
    ASSERT_EQ(g.edge_count(), 2u);
    EXPECT_EQ(g.edges()[0], (Edge{0, 1}));
    EXPECT_EQ(g.edges()[1], (Edge{1, 2}));
    EXPECT_TRUE(g.has_edge(2, 1));
    EXPECT_FALSE(g.has_edge(0, 2));
}

TEST(Graph, RejectsInvalidInput) {
    EXPECT_THROW(Graph::create(3, {{0, 0}, {1, 2}}), InvalidArgument);          // self-loop
    EXPECT_THROW(Graph::create(3, {{0, 1}, {1, 0}, {1, 2}}), InvalidArgument);  // duplicate
    EXPECT_THROW(Graph::create(3, {{0, 1}, {1, 3}}), InvalidArgument);          // out of range
    EXPECT_THROW(Graph::create(4, {{0, 1}, {2, 3}}), InvalidArgument);          // disconnected
    EXPECT_THROW(Graph::create(0, {}), InvalidArgument);
}

TEST(Graph, SingleNodeIsConnected) {
    const Graph g = Graph::create(1, {});
    EXPECT_EQ(g.node_count(), 1);
    EXPECT_EQ(g.degree_sequence().values, std::vector<int>{0});
}

TEST(Graph, DegreeSequences) {
    EXPECT_EQ(triangle().degree_sequence().values, (std::vector<int>{2, 2, 2}));
    EXPECT_EQ(make_star(4).degree_sequence().values, (std::vector<int>{3, 1, 1, 1}));

    DegreeSequence d{{1, 3, 2, 2}};
    EXPECT_EQ(d.sum(), 8);
    EXPECT_EQ(d.sum_of_squares(), 18);
    EXPECT_EQ(d.sorted_descending().values, (std::vector<int>{3, 2, 2, 1}));
}

TEST(Laplacian, Triangle) {
    Eigen::Matrix3d expected;
    expected << 2, -1, -1, -1, 2, -1, -1, -1, 2;
    EXPECT_EQ(LaplaceMatrix(triangle()).matrix(), Eigen::MatrixXd(expected));
}

TEST(Laplacian, Path) {
    Eigen::Matrix3d expected;
    expected << 1, -1, 0, -1, 2, -1, 0, -1, 1;
    EXPECT_EQ(build_laplacian(make_path(3)).matrix(), Eigen::MatrixXd(expected));
}

TEST(Laplacian, RowSumsVanish) {
    Rng rng{7};
    for (int rep = 0; rep < 20; ++rep) {
        const LaplaceMatrix l(generate_er_gnl(15, 30, rng));
        EXPECT_EQ(l.matrix().rowwise().sum().cwiseAbs().maxCoeff(), 0.0);
        EXPECT_EQ(l.matrix(), l.matrix().transpose());
    }
}

TEST(EdgeList, RoundTrip) {
    const Graph g = make_circulant(7, 2);
    std::stringstream ss;
    write_edge_list(ss, g);
    EXPECT_EQ(read_edge_list(ss), g);
}

TEST(EdgeList, Format) {
    std::stringstream ss;
    write_edge_list(ss, make_path(3));
    EXPECT_EQ(ss.str(), "3 2\n0 1\n1 2\n");
}

TEST(EdgeList, ParseErrors) {
    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return read_edge_list(in);
    };
    EXPECT_THROW(parse(""), ParseError);
    EXPECT_THROW(parse("3 2\n0 1\n"), ParseError);         // too few edges
    EXPECT_THROW(parse("3 2\n0 1\n1 x\n"), ParseError);    // garbage
    EXPECT_THROW(parse("3 2\n0 1\n2 1\n"), ParseError);    // i > j
    EXPECT_THROW(parse("3 2\n0 1\n0 1\n"), ParseError);    // duplicate
    EXPECT_THROW(parse("4 2\n0 1\n2 3\n"), ParseError);    // disconnected
    EXPECT_THROW(parse("3 2\n0 1\n1 2\n0 2\n"), ParseError);  // trailing data
    EXPECT_NO_THROW(parse("3 2\n0 1\n1 2\n"));
}

TEST(GraphClasses, Counts) {
    const std::vector<std::size_t> expected{1, 1, 2, 6, 21, 112, 853};
    for (int n = 1; n <= 7; ++n) EXPECT_EQ(connected_graph_classes(n).size(), expected[n - 1]) << n;
}

TEST(GraphClasses, AllConnectedAndDistinct) {
    const auto classes = connected_graph_classes(5);
    std::set<std::vector<Edge>> seen;
    for (const Graph& g : classes) {
        EXPECT_TRUE(is_connected(g.node_count(), g.edges()));
        seen.emplace(g.edges().begin(), g.edges().end());
    }
    EXPECT_EQ(seen.size(), classes.size());
}

TEST(GraphClasses, EdgeCountDistributionN4) {
    // connected graphs on 4 nodes: 2 trees, 2 with 4 edges, 1 with 5, K4
    std::vector<int> by_edges(7, 0);
    for (const Graph& g : connected_graph_classes(4)) ++by_edges[g.edge_count()];
    EXPECT_EQ(by_edges, (std::vector<int>{0, 0, 0, 2, 2, 1, 1}));
}

TEST(GraphClasses, RejectsOutOfRange) {
    EXPECT_THROW(connected_graph_classes(0), InvalidArgument);
    EXPECT_THROW(connected_graph_classes(9), InvalidArgument);
}
