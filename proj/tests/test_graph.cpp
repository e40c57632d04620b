#include <gtest/gtest.h>

#include "lpt/block_cut_tree.hpp"
#include "lpt/connectivity.hpp"
#include "lpt/flow.hpp"
#include "lpt/generators.hpp"
#include "lpt/graph.hpp"
#include "oracles.hpp"

using namespace lpt;

TEST(Graph, RejectsLoopsDuplicatesAndBadIds) {
    Graph g(3);
    g.add_edge(0, 1);
    EXPECT_THROW(g.add_edge(1, 0), InputError);
    EXPECT_THROW(g.add_edge(2, 2), InputError);
    EXPECT_THROW(g.add_edge(0, 3), InputError);
    EXPECT_EQ(g.size(), 1u);
    EXPECT_TRUE(g.has_edge(1, 0));
}

TEST(InducedSubgraph, IdentityOnK4) {
    Graph k4 = complete_graph(4);
    EXPECT_EQ(induced_subgraph(k4, k4.vertices()).graph, k4);
}

TEST(InducedSubgraph, PrefixOfP5IsP3) {
    Subgraph s = induced_subgraph(path_graph(5), VertexSet{0, 1, 2});
    EXPECT_EQ(s.graph, path_graph(3));
    EXPECT_EQ(s.lift(2), 2);
}

TEST(InducedSubgraph, PetersenOuterFiveCycle) {
    Subgraph s = induced_subgraph(petersen_graph(), VertexSet{0, 1, 2, 3, 4});
    EXPECT_EQ(s.graph, cycle_graph(5));
}

TEST(InducedSubgraph, RejectsInvalidId) { EXPECT_THROW(induced_subgraph(path_graph(3), VertexSet{0, 7}), InputError); }

TEST(InducedSubgraph, PreservesAdjacencyOnRandomGraphs) {
    for (int trial = 0; trial < 50; ++trial) {
        Rng rng = Rng::stream(11, static_cast<std::uint64_t>(trial));
        Graph g = random_gnp(9, 0.4, rng);
        VertexSet keep;
        for (int v = 0; v < 9; ++v)
            if (rng.coin(0.6)) keep.push_back(v);
        Subgraph s = induced_subgraph(g, keep);
        for (int i = 0; i < s.graph.order(); ++i)
            for (int j = 0; j < s.graph.order(); ++j)
                if (i != j) {
                    EXPECT_EQ(s.graph.has_edge(i, j), g.has_edge(s.lift(i), s.lift(j)));
                }
    }
}

TEST(Distance, Examples) {
    EXPECT_EQ(distance(petersen_graph(), 3, 3), 0);
    EXPECT_EQ(distance(cycle_graph(6), 0, 3), 3);
    Graph two = Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    EXPECT_FALSE(distance(two, 0, 4).has_value());
}

TEST(Distance, MatchesFloydWarshallAndTriangleInequality) {
    for (int trial = 0; trial < 40; ++trial) {
        Rng rng = Rng::stream(12, static_cast<std::uint64_t>(trial));
        Graph g = random_gnp(1 + trial % 10, 0.35, rng);
        auto ref = oracle::floyd_warshall(g);
        auto d = all_pairs_distances(g);
        const int n = g.order();
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) {
                EXPECT_EQ(d[u][v], ref[u][v]);
                for (int w = 0; w < n; ++w)
                    if (d[u][w] >= 0 && d[w][v] >= 0) {
                        EXPECT_LE(d[u][v], d[u][w] + d[w][v]);
                    }
            }
    }
}

TEST(MinVertexCut, Examples) {
    // A separator may use terminals, so singletons are always cut by one vertex.
    CutCertificate p3 = min_vertex_cut(path_graph(3), {0}, {2});
    EXPECT_EQ(p3.separator.size(), 1u);
    EXPECT_EQ(p3.paths.size(), 1u);
    CutCertificate c4 = min_vertex_cut(cycle_graph(4), {0}, {2});
    EXPECT_EQ(c4.separator.size(), 1u);
    CutCertificate adj = min_vertex_cut(path_graph(2), {0}, {1});
    EXPECT_EQ(adj.separator, (VertexSet{0}));
}

TEST(MinInternalVertexCut, Examples) {
    CutCertificate p3 = min_internal_vertex_cut(path_graph(3), 0, 2);
    EXPECT_EQ(p3.separator, (VertexSet{1}));
    EXPECT_EQ(p3.paths.size(), 1u);
    CutCertificate c4 = min_internal_vertex_cut(cycle_graph(4), 0, 2);
    EXPECT_EQ(c4.separator, (VertexSet{1, 3}));
    ASSERT_EQ(c4.paths.size(), 2u);
    EXPECT_EQ(c4.paths[0].vertices, (std::vector<Vertex>{0, 1, 2}));
    EXPECT_EQ(c4.paths[1].vertices, (std::vector<Vertex>{0, 3, 2}));
    EXPECT_THROW(min_internal_vertex_cut(path_graph(2), 0, 1), InputError);
}

TEST(MinInternalVertexCut, MatchesConnectivityOfPair) {
    for (int trial = 0; trial < 60; ++trial) {
        Rng rng = Rng::stream(16, static_cast<std::uint64_t>(trial));
        Graph g = random_gnp(rng.uniform_int(3, 8), 0.45, rng);
        for (Vertex u = 0; u < g.order(); ++u)
            for (Vertex v = u + 1; v < g.order(); ++v) {
                if (g.has_edge(u, v)) continue;
                CutCertificate cut = min_internal_vertex_cut(g, u, v);
                EXPECT_FALSE(contains(cut.separator, u));
                EXPECT_FALSE(contains(cut.separator, v));
                EXPECT_TRUE(separates(g, cut.separator, {u}, {v}));
                EXPECT_EQ(cut.separator.size(), cut.paths.size());
                EXPECT_EQ(static_cast<int>(cut.separator.size()), oracle::min_separator(g, {u}, {v}, {u, v}));
                EXPECT_EQ(static_cast<int>(cut.separator.size()), local_connectivity(g, u, v));
            }
    }
}

TEST(MinVertexCut, MengerEqualityAgainstBruteForce) {
    for (int trial = 0; trial < 120; ++trial) {
        Rng rng = Rng::stream(13, static_cast<std::uint64_t>(trial));
        const int n = rng.uniform_int(2, 9);
        Graph g = random_gnp(n, 0.4, rng);
        VertexSet a, b;
        for (int v = 0; v < n; ++v) {
            if (rng.coin(0.3)) a.push_back(v);
            if (rng.coin(0.3)) b.push_back(v);
        }
        CutCertificate cut = min_vertex_cut(g, a, b);
        EXPECT_EQ(static_cast<int>(cut.separator.size()), oracle::min_separator(g, a, b));
        EXPECT_EQ(cut.separator.size(), cut.paths.size());
        EXPECT_TRUE(separates(g, cut.separator, a, b));
        VertexSet used;
        for (const Path& p : cut.paths) {
            EXPECT_TRUE(is_path_in(g, p));
            EXPECT_TRUE(contains(a, p.front()));
            EXPECT_TRUE(contains(b, p.back()));
            EXPECT_FALSE(intersects(used, p.vertex_set()));
            used = set_union(used, p.vertex_set());
        }
    }
}

TEST(Connectivity, Examples) {
    EXPECT_EQ(connectivity_class(path_graph(4)), ConnectivityClass::Connected);
    EXPECT_EQ(connectivity_class(cycle_graph(5)), ConnectivityClass::TwoConnected);
    EXPECT_EQ(connectivity_class(complete_graph(4)), ConnectivityClass::ThreeConnectedPlus);
    EXPECT_EQ(connectivity_class(Graph(2)), ConnectivityClass::Disconnected);
    EXPECT_EQ(connectivity_class(petersen_graph()), ConnectivityClass::ThreeConnectedPlus);
}

TEST(Connectivity, MatchesDeletionSearch) {
    for (int trial = 0; trial < 80; ++trial) {
        Rng rng = Rng::stream(14, static_cast<std::uint64_t>(trial));
        Graph g = random_gnp(rng.uniform_int(2, 8), 0.55, rng);
        EXPECT_EQ(vertex_connectivity(g), oracle::connectivity(g));
    }
}

TEST(BlockCutTree, Examples) {
    BlockCutTree p3 = block_cut_tree(path_graph(3));
    EXPECT_EQ(p3.blocks.size(), 2u);
    EXPECT_EQ(p3.cut_vertices, (VertexSet{1}));
    BlockCutTree c5 = block_cut_tree(cycle_graph(5));
    EXPECT_EQ(c5.blocks.size(), 1u);
    EXPECT_TRUE(c5.cut_vertices.empty());
    BlockCutTree bow = block_cut_tree(bowtie_graph());
    EXPECT_EQ(bow.blocks.size(), 2u);
    EXPECT_EQ(bow.cut_vertices, (VertexSet{0}));
    EXPECT_THROW(block_cut_tree(Graph(2)), InputError);
}

TEST(BlockCutTree, StructuralProperties) {
    for (int trial = 0; trial < 80; ++trial) {
        Rng rng = Rng::stream(15, static_cast<std::uint64_t>(trial));
        const int n = rng.uniform_int(1, 12);
        Graph g = random_connected(n, 0.12, rng);
        BlockCutTree t = block_cut_tree(g);
        std::size_t sum = 0;
        for (const auto& b : t.blocks) sum += b.size() - 1;
        EXPECT_EQ(static_cast<int>(sum), n - 1);
        // Each edge in exactly one block.
        for (const Edge& e : g.edges()) {
            int holders = 0;
            for (const auto& b : t.blocks) holders += contains(b, e.u) && contains(b, e.v);
            EXPECT_EQ(holders, 1);
        }
        // Incidence graph is a tree.
        Graph tree(t.node_count());
        for (auto [x, y] : t.tree_edges()) tree.add_edge(x, y);
        EXPECT_TRUE(is_connected(tree));
        EXPECT_EQ(static_cast<int>(tree.size()), t.node_count() - 1);
        // Cut vertices: deletion disconnects the graph.
        for (Vertex v = 0; v < n; ++v) {
            std::vector<char> removed(n, 0);
            removed[v] = 1;
            EXPECT_EQ(contains(t.cut_vertices, v), !oracle::connected_without(g, removed)) << v;
        }
    }
}

TEST(Canonical, CycleRotationAndReflection) {
    EXPECT_EQ(canonical(Cycle{{3, 1, 4, 2}}).vertices, (std::vector<Vertex>{1, 3, 2, 4}));
    EXPECT_EQ(canonical(Path{{5, 2, 0}}).vertices, (std::vector<Vertex>{0, 2, 5}));
}
