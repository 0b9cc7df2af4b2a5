#include <gtest/gtest.h>

#include <random>

#include "dcl/graph.hpp"

using namespace dcl;

TEST(EdgeList, Triangle) {
    Multigraph g = read_edge_list("3\n0 1\n1 2\n2 0\n");
    EXPECT_EQ(g.vertex_count(), 3u);
    ASSERT_EQ(g.edge_count(), 3u);
    EXPECT_EQ(g.edges()[2], (Edge{0, 2}));  // normalised u <= v
    EXPECT_EQ(write_edge_list(g), "3\n0 1\n1 2\n0 2\n");
}

TEST(EdgeList, LoopAndDigon) {
    Multigraph loop = read_edge_list("1\n0 0\n");
    ASSERT_EQ(loop.edge_count(), 1u);
    EXPECT_EQ(loop.edges()[0], (Edge{0, 0}));

    Multigraph digon = read_edge_list("2\n0 1\n0 1\n");
    EXPECT_EQ(digon.edge_count(), 2u);
    EXPECT_EQ(digon.edges()[0], digon.edges()[1]);
}

TEST(EdgeList, Comments) {
    Multigraph g = read_edge_list("# header\n2\n# edge follows\n0 1\n");
    EXPECT_EQ(g.vertex_count(), 2u);
    EXPECT_EQ(g.edge_count(), 1u);
}

TEST(EdgeList, Errors) {
    EXPECT_THROW(read_edge_list(""), ParseError);
    EXPECT_THROW(read_edge_list("3\n0 1"), ParseError);  // no trailing newline
    EXPECT_THROW(read_edge_list("x\n"), ParseError);
    EXPECT_THROW(read_edge_list("3\n0  1\n"), ParseError);
    EXPECT_THROW(read_edge_list("3\n0\n"), ParseError);
    EXPECT_THROW(read_edge_list("3\n0 1\r\n"), ParseError);
    EXPECT_THROW(read_edge_list("3\n\n"), ParseError);
    EXPECT_THROW(read_edge_list("3\n0 3\n"), EndpointOutOfRange);
    EXPECT_THROW(read_edge_list("# only comments\n"), ParseError);
    try {
        read_edge_list("3\n0 1\nbad\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3u);
    }
}

TEST(EdgeList, RoundTripProperty) {
    std::mt19937 rng(3);
    for (int k = 0; k < 200; ++k) {
        std::size_t n = 1 + rng() % 30;
        Multigraph g(n);
        std::size_t m = rng() % 60;
        for (std::size_t e = 0; e < m; ++e) g.add_edge(rng() % n, rng() % n);
        std::string text = write_edge_list(g);
        EXPECT_EQ(read_edge_list(text), g);
        EXPECT_EQ(write_edge_list(read_edge_list(text)), text);
    }
}

TEST(Degrees, LoopsCountTwice) {
    EXPECT_EQ(degrees(read_edge_list("3\n0 1\n1 2\n2 0\n")), (std::vector<std::uint64_t>{2, 2, 2}));
    EXPECT_EQ(degrees(read_edge_list("1\n0 0\n")), (std::vector<std::uint64_t>{2}));
    EXPECT_EQ(degrees(read_edge_list("2\n0 1\n0 1\n")), (std::vector<std::uint64_t>{2, 2}));
    auto hist = degree_histogram(read_edge_list("4\n0 1\n0 2\n0 3\n"));
    EXPECT_EQ(hist.at(3), 1u);
    EXPECT_EQ(hist.at(1), 3u);
}

TEST(Cyclomatic, Basics) {
    EXPECT_EQ(cyclomatic_number(read_edge_list("3\n0 1\n1 2\n2 0\n")), 1);
    EXPECT_EQ(cyclomatic_number(read_edge_list("4\n0 1\n2 3\n")), 0);
    EXPECT_EQ(cyclomatic_number(read_edge_list("2\n0 0\n0 1\n0 1\n")), 2);
    EXPECT_EQ(connected_components(read_edge_list("5\n0 1\n2 3\n")), 3u);
}
