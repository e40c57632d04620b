#include <gtest/gtest.h>

#include "lpt/canon.hpp"
#include "lpt/generators.hpp"
#include "lpt/io.hpp"

using namespace lpt;

TEST(EdgeList, Triangle) {
    Graph g = parse_edge_list("3 3\n0 1\n1 2\n2 0\n");
    EXPECT_EQ(g, complete_graph(3));
    EXPECT_EQ(parse_edge_list(to_edge_list(g)), g);
}

TEST(EdgeList, CommentsAndBlankLines) {
    Graph g = parse_edge_list("# P3\n\n3 2\n0 1\n\n1 2\n");
    EXPECT_EQ(g, path_graph(3));
}

TEST(EdgeList, Errors) {
    auto message = [](const std::string& text) {
        try {
            parse_edge_list(text);
        } catch (const InputError& e) {
            return std::string(e.what());
        }
        return std::string();
    };
    EXPECT_EQ(message("2 1\n0 0\n"), "line 2: self-loop at vertex 0");
    EXPECT_EQ(message("3 2\n0 1\n1 0\n"), "line 3: duplicate edge (1,0)");
    EXPECT_EQ(message("3 1\n0 5\n"), "line 2: vertex id out of range");
    EXPECT_EQ(message("3 1\n0 x\n"), "line 2: expected two integers");
    EXPECT_EQ(message("3 2\n0 1\n"), "expected 2 edges, found 1");
    EXPECT_EQ(message("3 1\n0 1\n1 2\n"), "line 3: more lines than the declared edge count");
    EXPECT_EQ(message(""), "empty edge list");
}

TEST(Graph6, DecodesStarExample) {
    Graph g = parse_graph6("D?{");
    EXPECT_EQ(g.order(), 5);
    EXPECT_EQ(g.size(), 4u);
    EXPECT_TRUE(isomorphic(g, star_graph(4)));
    EXPECT_EQ(g.degree(4), 4);
    EXPECT_EQ(to_graph6(g), "D?{");
}

TEST(Graph6, KnownEncodings) {
    EXPECT_EQ(to_graph6(Graph(0)), "?");
    EXPECT_EQ(to_graph6(Graph(1)), "@");
    EXPECT_EQ(to_graph6(complete_graph(2)), "A_");
    EXPECT_EQ(to_graph6(complete_graph(4)), "C~");
    EXPECT_EQ(to_graph6(petersen_graph()).size(), 9u);
}

TEST(Graph6, RoundTripsRandomGraphs) {
    for (int trial = 0; trial < 200; ++trial) {
        Rng rng = Rng::stream(71, static_cast<std::uint64_t>(trial));
        Graph g = random_gnp(rng.uniform_int(0, 80), rng.uniform(0.0, 0.5), rng);
        EXPECT_EQ(parse_graph6(to_graph6(g)), g);
    }
}

TEST(Graph6, Errors) {
    EXPECT_THROW(parse_graph6(""), InputError);
    EXPECT_THROW(parse_graph6("D?"), InputError);
    EXPECT_THROW(parse_graph6("D?{?"), InputError);
    EXPECT_THROW(parse_graph6("A`"), InputError);  // padding bit set
    EXPECT_THROW(parse_graph6("D \x7f"), InputError);
    EXPECT_THROW(parse_graph("D?{\nD?{\n", GraphFormat::Graph6), InputError);
}

TEST(Format, Names) {
    EXPECT_EQ(parse_format("graph6"), GraphFormat::Graph6);
    EXPECT_EQ(guess_format("x.g6"), GraphFormat::Graph6);
    EXPECT_EQ(guess_format("x.txt"), GraphFormat::EdgeList);
    EXPECT_THROW(parse_format("dot"), InputError);
}
