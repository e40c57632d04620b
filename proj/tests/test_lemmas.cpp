#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <set>

#include "lpt/generators.hpp"
#include "lpt/lemmas/cubic.hpp"
#include "lpt/lemmas/distant_pairs.hpp"
#include "lpt/lemmas/inequality.hpp"
#include "lpt/lemmas/intersect.hpp"
#include "lpt/lemmas/matching.hpp"
#include "lpt/lemmas/nice_hitting.hpp"
#include "lpt/lemmas/separate.hpp"
#include "lpt/lemmas/weighted_cycle.hpp"
#include "oracles.hpp"

using namespace lpt;

namespace {

// Largest number of matching edges on any path of the union graph.
int best_matching_path(const MatchingInstance& inst) {
    Graph g = inst.union_graph();
    std::set<std::pair<Vertex, Vertex>> m;
    for (auto [a, b] : inst.m) m.insert({std::min(a, b), std::max(a, b)});
    int best = 0;
    oracle::for_each_directed_path(g, [&](const std::vector<Vertex>& p) {
        int c = 0;
        for (std::size_t i = 1; i < p.size(); ++i) c += m.count({std::min(p[i - 1], p[i]), std::max(p[i - 1], p[i])});
        best = std::max(best, c);
    });
    return best;
}

// Positive matching-edge counts realised by paths of the union graph.
std::set<int> reachable_counts(const MatchingInstance& inst) {
    Graph g = inst.union_graph();
    std::set<std::pair<Vertex, Vertex>> m;
    for (auto [a, b] : inst.m) m.insert({std::min(a, b), std::max(a, b)});
    std::set<int> out;
    oracle::for_each_directed_path(g, [&](const std::vector<Vertex>& p) {
        int c = 0;
        for (std::size_t i = 1; i < p.size(); ++i) c += m.count({std::min(p[i - 1], p[i]), std::max(p[i - 1], p[i])});
        if (c > 0) out.insert(c);
    });
    return out;
}

int best_gain_through_e(const CubicInstance& inst) {
    VertexSet on = inst.c0.vertex_set();
    int best = -1;
    for (const auto& c : oracle::all_cycles(inst.graph)) {
        Cycle cyc{c};
        if (!cycle_has_edge(cyc, inst.e)) continue;
        best = std::max(best, gain_over(cyc, on));
    }
    return best;
}

}  // namespace

// intersect

TEST(Intersect, LongestPathsOnRandomConnectedGraphs) {
    for (int trial = 0; trial < 40; ++trial) {
        Rng rng = Rng::stream(41, static_cast<std::uint64_t>(trial));
        Graph g = random_connected(rng.uniform_int(2, 8), 0.25, rng);
        LongestFamily fam = enumerate_longest(g, Kind::Path);
        for (std::size_t i = 0; i < fam.size(); ++i)
            for (std::size_t j = i; j < fam.size(); ++j) {
                IntersectionVerdict v = check_longest_intersection(fam.path(i), fam.path(j), g);
                EXPECT_TRUE(v.intersect);
            }
    }
}

TEST(Intersect, LongestCyclesOfK4) {
    Graph k4 = complete_graph(4);
    LongestFamily fam = enumerate_longest(k4, Kind::Cycle);
    ASSERT_EQ(fam.size(), 3u);
    for (std::size_t i = 0; i < fam.size(); ++i)
        for (std::size_t j = 0; j < fam.size(); ++j) {
            IntersectionVerdict v = check_longest_intersection(fam.cycle(i), fam.cycle(j), k4);
            EXPECT_TRUE(v.two_linked);
            EXPECT_TRUE(v.intersect);
        }
}

TEST(Intersect, LongestCyclesOnRandomTwoConnectedGraphs) {
    for (int trial = 0; trial < 60; ++trial) {
        Rng rng = Rng::stream(42, static_cast<std::uint64_t>(trial));
        Graph g = random_two_connected(rng.uniform_int(3, 12), 0.15, rng);
        LongestFamily fam = enumerate_longest(g, Kind::Cycle);
        const std::size_t limit = std::min<std::size_t>(fam.size(), 40);
        for (std::size_t i = 0; i < limit; ++i)
            for (std::size_t j = i; j < limit; ++j) EXPECT_TRUE(check_longest_intersection(fam.cycle(i), fam.cycle(j), g).intersect);
    }
}

TEST(Intersect, RejectsNonLongestInput) {
    Graph c4 = cycle_graph(4);
    EXPECT_THROW(check_longest_intersection(Path{{0, 1}}, Path{{0, 1, 2, 3}}, c4), InputError);
    Graph k4 = complete_graph(4);
    EXPECT_THROW(check_longest_intersection(Cycle{{0, 1, 2}}, Cycle{{0, 1, 2, 3}}, k4), InputError);
}

TEST(Intersect, DisjointLocallyLongestPathsWithoutTwoLinks) {
    Graph g = path_graph(6);
    IntersectionVerdict v = check_longest_intersection(Path{{0, 1}}, Path{{4, 5}}, g);
    EXPECT_FALSE(v.two_linked);
    EXPECT_FALSE(v.intersect);
}

// separate

TEST(Separate, DifferentComponents) {
    Graph g = Graph::from_edges(7, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {5, 6}});
    CutCertificate cut = separate_cycle_from_longest(Cycle{{0, 1, 2}}, Path{{3, 4, 5, 6}}, g);
    EXPECT_TRUE(cut.separator.empty());
}

TEST(Separate, PendantTriangle) {
    // Two triangles joined by the path 2..9; cut vertex 2 separates them.
    Graph h = Graph::from_edges(12, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 9}, {9, 10}, {10, 11}, {9, 11}});
    LongestFamily cyc = enumerate_longest(h, Kind::Cycle);
    ASSERT_EQ(cyc.length, 3);
    CutCertificate cut = separate_cycle_from_longest(Cycle{{0, 1, 2}}, Cycle{{9, 10, 11}}, h);
    EXPECT_EQ(cut.separator.size(), 1u);
}

TEST(Separate, RandomGraphsMeetBoundAndMatchBruteForce) {
    // A spine path with pendant triangles and random extra spine chords; the
    // triangles hanging near the middle avoid some longest path.
    int tested = 0;
    for (int trial = 0; trial < 120; ++trial) {
        Rng rng = Rng::stream(43, static_cast<std::uint64_t>(trial));
        const int spine = rng.uniform_int(8, 11);
        const int triangles = rng.uniform_int(1, 2);
        Graph g(spine + 3 * triangles);
        for (int i = 0; i + 1 < spine; ++i) g.add_edge(i, i + 1);
        for (int k = 0; k < triangles; ++k) {
            const Vertex a = spine + 3 * k;
            g.add_edge(a, a + 1);
            g.add_edge(a + 1, a + 2);
            g.add_edge(a, a + 2);
            g.add_edge(a, rng.uniform_int(3, spine - 4));
            if (rng.coin(0.3)) ensure_edge(g, a + 1, rng.uniform_int(3, spine - 4));
        }
        if (rng.coin(0.5)) ensure_edge(g, rng.uniform_int(0, spine - 1), rng.uniform_int(0, spine - 1));
        LongestFamily fam = enumerate_longest(g, Kind::Path);
        for (std::size_t i = 0; i < std::min<std::size_t>(fam.size(), 4); ++i) {
            VertexSet lv = make_vertex_set(fam.members[i]);
            for (int k = 0; k < triangles; ++k) {
                const Vertex a = spine + 3 * k;
                std::vector<Vertex> c{a, a + 1, a + 2};
                if (intersects(make_vertex_set(c), lv)) continue;
                CutCertificate cut = separate_cycle_from_longest(Cycle{c}, fam.path(i), g);
                EXPECT_LE(static_cast<double>(cut.separator.size()), std::sqrt(2.0 * fam.length) + 1e-9);
                EXPECT_EQ(static_cast<int>(cut.separator.size()), oracle::min_separator(g, c, fam.members[i]));
                ++tested;
            }
        }
    }
    EXPECT_GT(tested, 40);
}

TEST(Separate, RejectsOverlap) {
    Graph g = cycle_graph(5);
    EXPECT_THROW(separate_cycle_from_longest(Cycle{{0, 1, 2, 3, 4}}, Path{{0, 1, 2, 3, 4}}, g), InputError);
}

// nice hitting set

TEST(NiceHitting, PathGraph) {
    NiceHitting h = nice_hitting_set(path_graph(6), Kind::Path);
    ASSERT_TRUE(h.is_vertex());
    EXPECT_EQ(h.reason, NiceCase::CommonVertex);
}

TEST(NiceHitting, BowtieCutVertex) {
    NiceHitting h = nice_hitting_set(bowtie_graph(), Kind::Path);
    ASSERT_TRUE(h.is_vertex());
    EXPECT_EQ(std::get<Vertex>(h.hit), 0);
    EXPECT_TRUE(is_transversal(h.vertices(), enumerate_longest(bowtie_graph(), Kind::Path)));
}

TEST(NiceHitting, K4CycleKind) {
    NiceHitting h = nice_hitting_set(complete_graph(4), Kind::Cycle);
    ASSERT_FALSE(h.is_vertex());
    EXPECT_EQ(std::get<Cycle>(h.hit).length(), 4);
}

TEST(NiceHitting, PetersenHamiltonianPathsShareEveryVertex) {
    NiceHitting h = nice_hitting_set(petersen_graph(), Kind::Path);
    ASSERT_TRUE(h.is_vertex());
    EXPECT_EQ(std::get<Vertex>(h.hit), 0);
}

TEST(NiceHitting, RandomGraphsAreHit) {
    for (int trial = 0; trial < 80; ++trial) {
        Rng rng = Rng::stream(44, static_cast<std::uint64_t>(trial));
        Graph g = random_connected(rng.uniform_int(1, 12), rng.uniform(0.0, 0.3), rng);
        NiceHitting h = nice_hitting_set(g, Kind::Path);
        EXPECT_TRUE(is_transversal(h.vertices(), enumerate_longest(g, Kind::Path)));
        if (!h.is_vertex()) {
            EXPECT_TRUE(is_cycle_in(g, std::get<Cycle>(h.hit)));
        }
        if (exact_transversal_number(g, Kind::Path).vertices.size() > 1) {
            EXPECT_FALSE(h.is_vertex());
        }
    }
}

TEST(NiceHitting, RejectsBadInput) {
    EXPECT_THROW(nice_hitting_set(Graph(2), Kind::Path), InputError);
    EXPECT_THROW(nice_hitting_set(path_graph(4), Kind::Cycle), InputError);
}

// distant pairs

TEST(DistantPairs, SingleAdjacentPair) {
    DistantPairsResult r = distant_pairs_sum(Cycle{{0, 1, 2, 3}}, {{0, 1}});
    EXPECT_EQ(r.sum, 1);
    EXPECT_DOUBLE_EQ(r.bound, 0.5);
}

TEST(DistantPairs, ExtremalConfiguration) {
    auto [c, pairs] = extremal_distant_pairs(3);
    EXPECT_EQ(distant_pairs_sum(c, pairs).sum, 5);
    for (int k = 2; k <= 9; ++k) {
        auto [ck, pk] = extremal_distant_pairs(k);
        EXPECT_EQ(distant_pairs_sum(ck, pk).sum, (k * k + 1) / 2) << k;
    }
}

TEST(DistantPairs, ExhaustivePlacements) {
    long long placements = 0;
    for (int len = 3; len <= 12; ++len) {
        Cycle c;
        for (int i = 0; i < len; ++i) c.vertices.push_back(i);
        for (int k = 1; k <= 4 && 2 * k <= len; ++k) {
            // Choose 2k positions; the first k (cyclically from a rotation)
            // are a's and the rest b's: every non-interleaved labeling.
            std::vector<int> pick(static_cast<std::size_t>(len), 0);
            std::fill(pick.end() - 2 * k, pick.end(), 1);
            do {
                std::vector<int> chosen;
                for (int i = 0; i < len; ++i)
                    if (pick[static_cast<std::size_t>(i)]) chosen.push_back(i);
                for (int rot = 0; rot < 2 * k; ++rot) {
                    std::vector<int> as, bs;
                    for (int i = 0; i < 2 * k; ++i) (i < k ? as : bs).push_back(chosen[static_cast<std::size_t>((rot + i) % (2 * k))]);
                    std::vector<int> perm(static_cast<std::size_t>(k));
                    std::iota(perm.begin(), perm.end(), 0);
                    do {
                        std::vector<std::pair<Vertex, Vertex>> pairs;
                        long long direct = 0;
                        for (int i = 0; i < k; ++i) {
                            Vertex a = as[static_cast<std::size_t>(i)], b = bs[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
                            pairs.emplace_back(a, b);
                            int d = std::abs(a - b);
                            direct += std::min(d, len - d);
                        }
                        DistantPairsResult r = distant_pairs_sum(c, pairs);
                        EXPECT_EQ(r.sum, direct);
                        EXPECT_GE(2 * r.sum, static_cast<long long>(k) * k);
                        ++placements;
                    } while (std::next_permutation(perm.begin(), perm.end()));
                }
            } while (std::next_permutation(pick.begin(), pick.end()));
        }
    }
    EXPECT_GT(placements, 10000);
}

TEST(DistantPairs, RejectsInterleavedPairs) {
    EXPECT_THROW(distant_pairs_sum(Cycle{{0, 1, 2, 3}}, {{0, 1}, {2, 3}}), InputError);
    EXPECT_THROW(distant_pairs_sum(Cycle{{0, 1, 2, 3}}, {{0, 1}, {0, 2}}), InputError);
    EXPECT_THROW(distant_pairs_sum(Cycle{{0, 1, 2, 3}}, {{0, 7}}), InputError);
}

// inequality

TEST(Inequality, Examples) {
    for (double x : {0.0, 0.5, 3.0, 70.0}) EXPECT_TRUE(inequality_check(0.18, x, {0.0}).holds);
    EXPECT_TRUE(inequality_check(0.1, 0.0, {3.0, 5.0, 8.0}).holds);
    EXPECT_THROW(inequality_check(0.2, 1.0, {1.0}), InputError);
    EXPECT_THROW(inequality_check(0.1, -1.0, {1.0}), InputError);
    EXPECT_THROW(inequality_check(0.1, 1.0, {}), InputError);
}

TEST(Inequality, RandomizedSweep) {
    Rng rng(45);
    for (int i = 0; i < 100000; ++i) {
        double c = 0.18 * (1.0 - rng.uniform01());
        double x = rng.uniform(0.0, 100.0);
        std::vector<double> ys(static_cast<std::size_t>(rng.uniform_int(1, 6)));
        for (double& y : ys) y = rng.uniform(0.0, 100.0);
        ASSERT_TRUE(inequality_check(c, x, ys).holds);
    }
}

// weighted cycle

TEST(WeightedCycle, K4IncidentEdges) {
    WeightedGraph wg(complete_graph(4), {1, 1, 1, 1});
    Cycle c = max_weight_cycle_through_edges(wg, Edge(0, 1), Edge(1, 2));
    EXPECT_EQ(wg.weight_of(c.vertices), 4);
    EXPECT_TRUE(cycle_has_edge(c, Edge(0, 1)));
    EXPECT_TRUE(cycle_has_edge(c, Edge(1, 2)));
    WeightedGraph zero(complete_graph(4), {0, 0, 0, 0});
    Cycle z = max_weight_cycle_through_edges(zero, Edge(0, 1), Edge(2, 3));
    EXPECT_TRUE(cycle_has_edge(z, Edge(2, 3)));
}

TEST(WeightedCycle, PrismTriangleEdges) {
    Graph prism = prism_graph(3);
    WeightedGraph wg(prism, std::vector<int>(6, 1));
    Cycle c = max_weight_cycle_through_edges(wg, Edge(0, 1), Edge(1, 2));
    int best = 0;
    for (const auto& seq : oracle::all_cycles(prism)) {
        Cycle x{seq};
        if (cycle_has_edge(x, Edge(0, 1)) && cycle_has_edge(x, Edge(1, 2))) best = std::max(best, x.length());
    }
    EXPECT_EQ(c.length(), best);
    EXPECT_EQ(best, 6);
    EXPECT_GE(c.length(), 0.9 * std::pow(6.0, 0.8));
}

TEST(WeightedCycle, MatchesExhaustiveScan) {
    std::vector<Graph> graphs{complete_graph(4), prism_graph(3), prism_graph(4), prism_graph(5), complete_bipartite(3, 3), petersen_graph()};
    Rng rng(46);
    for (const Graph& g : graphs) {
        auto cycles = oracle::all_cycles(g);
        auto edges = g.edges();
        for (int trial = 0; trial < 6; ++trial) {
            std::vector<int> w(static_cast<std::size_t>(g.order()));
            for (int& x : w) x = rng.uniform_int(0, 3);
            WeightedGraph wg(g, w);
            Edge e = edges[static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(edges.size()) - 1))];
            Edge f = edges[static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(edges.size()) - 1))];
            long long best = -1;
            for (const auto& seq : cycles) {
                Cycle x{seq};
                if (cycle_has_edge(x, e) && cycle_has_edge(x, f)) best = std::max(best, wg.weight_of(seq));
            }
            Cycle c = max_weight_cycle_through_edges(wg, e, f);
            EXPECT_TRUE(is_cycle_in(g, c));
            EXPECT_TRUE(cycle_has_edge(c, e) && cycle_has_edge(c, f));
            EXPECT_EQ(wg.weight_of(c.vertices), best);
        }
    }
}

TEST(WeightedCycle, RejectsNonCubic) {
    WeightedGraph wg(complete_graph(5), std::vector<int>(5, 1));
    EXPECT_THROW(max_weight_cycle_through_edges(wg, Edge(0, 1), Edge(1, 2)), InputError);
}

// cubic

TEST(Cubic, K4WithTriangle) {
    CubicInstance inst{complete_graph(4), Edge(0, 1), Cycle{{0, 1, 2}}};
    CubicResult r = cubic_cycle_finder(inst);
    EXPECT_EQ(r.outside, 1);
    EXPECT_EQ(r.gain, 1);
    EXPECT_TRUE(cycle_has_edge(r.cycle, inst.e));
}

TEST(Cubic, FromMatchingReductionWithThreeEdges) {
    MatchingInstance inst = make_matching_instance(Path{{0, 1, 2}}, Path{{3, 4, 5}}, {{0, 3}, {1, 4}, {2, 5}});
    MatchingAuxiliary aux = matching_auxiliary(contract_instance(inst));
    EXPECT_EQ(aux.cubic.graph.order(), 4);
    CubicResult r = cubic_cycle_finder(aux.cubic);
    EXPECT_GE(r.gain, 1);
    EXPECT_EQ(r.gain, best_gain_through_e(aux.cubic));
}

TEST(Cubic, RandomInstancesMeetBoundAndStayBelowOptimum) {
    for (int trial = 0; trial < 100; ++trial) {
        Rng rng = Rng::stream(47, static_cast<std::uint64_t>(trial));
        CubicInstance inst = random_cubic_instance(20, rng);
        CubicResult r = cubic_cycle_finder(inst);
        EXPECT_TRUE(is_cycle_in(inst.graph, r.cycle));
        EXPECT_TRUE(cycle_has_edge(r.cycle, inst.e));
        EXPECT_GE(r.gain + 1e-9, 0.15 * std::pow(r.outside, 0.8));
        EXPECT_LE(r.gain, best_gain_through_e(inst));
    }
}

TEST(Cubic, RejectsInvalidInstances) {
    // Vertex 3 off the cycle has degree 2 in K_4 minus an edge.
    Graph g = Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}});
    EXPECT_THROW(cubic_cycle_finder(CubicInstance{g, Edge(0, 1), Cycle{{0, 1, 2}}}), InputError);
    EXPECT_THROW(cubic_cycle_finder(CubicInstance{complete_graph(4), Edge(0, 1), Cycle{{0, 2, 3}}}), InputError);
}

// matchings

TEST(Matching, SingleEdge) {
    MatchingInstance inst = make_matching_instance(Path{{0, 1}}, Path{{2}}, {{1, 2}});
    MatchingResult r = matching_traverse_path(inst);
    EXPECT_EQ(r.path.vertices, (std::vector<Vertex>{1, 2}));
    EXPECT_EQ(r.matching_edges, 1);
}

TEST(Matching, ParallelLadderOfTen) {
    Path p1, p2;
    std::vector<std::pair<Vertex, Vertex>> m;
    for (int i = 0; i < 10; ++i) {
        p1.vertices.push_back(i);
        p2.vertices.push_back(10 + i);
        m.emplace_back(i, 10 + i);
    }
    MatchingInstance inst = make_matching_instance(p1, p2, m);
    MatchingResult r = matching_traverse_path(inst);
    EXPECT_GE(r.matching_edges, 1);
    EXPECT_LE(r.matching_edges, 10);
    EXPECT_LE(r.matching_edges, best_matching_path(inst));
    EXPECT_EQ(best_matching_path(inst), 10);
    // Regression value of the deterministic reduction.
    EXPECT_EQ(r.matching_edges, 6);
}

TEST(Matching, RandomInstances) {
    for (int trial = 0; trial < 200; ++trial) {
        Rng rng = Rng::stream(48, static_cast<std::uint64_t>(trial));
        const int m = rng.uniform_int(0, 30);
        MatchingInstance inst = random_matching_instance(m, m <= 12 ? 2 : 6, rng);
        MatchingResult r = matching_traverse_path(inst);
        EXPECT_TRUE(is_path_in(inst.union_graph(), r.path));
        EXPECT_GE(r.matching_edges + 1e-9, 0.1 * std::pow(m, 0.8));
        if (m <= 12) {
            EXPECT_LE(r.matching_edges, best_matching_path(inst));
        }
    }
}

TEST(Matching, ContractionPreservesReachableCounts) {
    for (int trial = 0; trial < 60; ++trial) {
        Rng rng = Rng::stream(49, static_cast<std::uint64_t>(trial));
        MatchingInstance inst = random_matching_instance(rng.uniform_int(1, 8), 3, rng);
        MatchingInstance small = contract_instance(inst);
        EXPECT_EQ(reachable_counts(inst), reachable_counts(small));
    }
}

TEST(Matching, RejectsInvalidInstances) {
    EXPECT_THROW(make_matching_instance(Path{{0, 1}}, Path{{1, 2}}, {}), InputError);
    EXPECT_THROW(make_matching_instance(Path{{0, 1}}, Path{{2, 3}}, {{0, 2}, {0, 3}}), InputError);
    EXPECT_THROW(make_matching_instance(Path{{0, 1}}, Path{{2, 3}}, {{0, 1}}), InputError);
}
