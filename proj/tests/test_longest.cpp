#include <gtest/gtest.h>

#include <set>

#include "lpt/generators.hpp"
#include "lpt/longest.hpp"
#include "oracles.hpp"

using namespace lpt;

namespace {

std::set<std::vector<Vertex>> as_set(const LongestFamily& fam) {
    return {fam.members.begin(), fam.members.end()};
}

}  // namespace

TEST(EnumerateLongest, Examples) {
    LongestFamily p5 = enumerate_longest(path_graph(5), Kind::Path);
    EXPECT_EQ(p5.length, 4);
    EXPECT_EQ(p5.size(), 1u);
    LongestFamily tri = enumerate_longest(complete_graph(3), Kind::Path);
    EXPECT_EQ(tri.length, 2);
    EXPECT_EQ(tri.size(), 3u);
    EXPECT_EQ(enumerate_longest(petersen_graph(), Kind::Path).length, 9);
    EXPECT_EQ(oracle::longest_path(petersen_graph()), 9);
}

TEST(EnumerateLongest, PetersenHasNoHamiltonianCycle) {
    EXPECT_EQ(enumerate_longest(petersen_graph(), Kind::Cycle).length, 9);
    EXPECT_EQ(oracle::longest_cycle(petersen_graph()), 9);
}

TEST(EnumerateLongest, RefusesOverCapAndDisconnected) {
    EXPECT_THROW(enumerate_longest(path_graph(25), Kind::Path), OracleInfeasible);
    OracleConfig cfg;
    cfg.cap = 4;
    EXPECT_THROW(enumerate_longest(path_graph(5), Kind::Path, cfg), OracleInfeasible);
    EXPECT_THROW(enumerate_longest(Graph(2), Kind::Path), InputError);
}

TEST(EnumerateLongest, AgreesWithBacktrackingRecount) {
    for (int trial = 0; trial < 100; ++trial) {
        Rng rng = Rng::stream(21, static_cast<std::uint64_t>(trial));
        Graph g = random_connected(rng.uniform_int(1, 12), rng.uniform(0.0, 0.35), rng);
        LongestFamily fam = enumerate_longest(g, Kind::Path);
        EXPECT_EQ(fam.length, oracle::longest_path(g));
        EXPECT_EQ(as_set(fam), oracle::longest_paths(g));
        EXPECT_TRUE(std::is_sorted(fam.members.begin(), fam.members.end()));
        for (std::size_t i = 0; i < fam.size(); ++i) EXPECT_EQ(canonical(fam.path(i)), fam.path(i));
    }
}

TEST(EnumerateLongest, CyclesAgreeWithRecount) {
    for (int trial = 0; trial < 60; ++trial) {
        Rng rng = Rng::stream(22, static_cast<std::uint64_t>(trial));
        Graph g = random_gnp(rng.uniform_int(3, 9), 0.45, rng);
        LongestFamily fam = enumerate_longest(g, Kind::Cycle);
        auto cycles = oracle::all_cycles(g);
        int best = oracle::longest_cycle(g);
        std::set<std::vector<Vertex>> expect;
        for (const auto& c : cycles)
            if (static_cast<int>(c.size()) == best) expect.insert(c);
        EXPECT_EQ(fam.length, best);
        EXPECT_EQ(as_set(fam), expect);
    }
}

TEST(ExactTransversal, Examples) {
    HittingSet star = exact_transversal_number(star_graph(3), Kind::Path);
    EXPECT_EQ(star.vertices, (VertexSet{0}));
    EXPECT_TRUE(star.optimal);
    EXPECT_EQ(exact_transversal_number(cycle_graph(7), Kind::Path).vertices.size(), 1u);
    HittingSet bow = exact_transversal_number(bowtie_graph(), Kind::Path);
    EXPECT_EQ(bow.vertices, (VertexSet{0}));
}

TEST(ExactTransversal, MatchesSubsetSearch) {
    for (int trial = 0; trial < 80; ++trial) {
        Rng rng = Rng::stream(23, static_cast<std::uint64_t>(trial));
        Graph g = random_connected(rng.uniform_int(1, 10), rng.uniform(0.0, 0.5), rng);
        LongestFamily fam = enumerate_longest(g, Kind::Path);
        HittingSet h = minimum_hitting_set(fam);
        EXPECT_TRUE(is_transversal(h.vertices, fam));
        EXPECT_EQ(static_cast<int>(h.vertices.size()), oracle::min_hitting_size(g.order(), oracle::longest_paths(g)));
        EXPECT_EQ(h.vertices.size(), exact_transversal_number_implicit(g, Kind::Path).vertices.size());
        EXPECT_TRUE(is_transversal(g.vertices(), fam));
    }
}

TEST(ExactTransversal, CycleFamilyMatchesImplicitRoute) {
    for (int trial = 0; trial < 40; ++trial) {
        Rng rng = Rng::stream(24, static_cast<std::uint64_t>(trial));
        Graph g = random_two_connected(rng.uniform_int(3, 10), 0.2, rng);
        HittingSet a = exact_transversal_number(g, Kind::Cycle);
        HittingSet b = exact_transversal_number_implicit(g, Kind::Cycle);
        EXPECT_EQ(a.vertices.size(), b.vertices.size());
    }
}

TEST(IsTransversal, Examples) {
    Graph pet = petersen_graph();
    LongestFamily fam = enumerate_longest(pet, Kind::Path);
    EXPECT_TRUE(is_transversal(pet.vertices(), fam));
    EXPECT_FALSE(is_transversal({}, fam));
    std::size_t through = 0;
    for (const auto& m : fam.members) through += std::find(m.begin(), m.end(), 0) != m.end();
    EXPECT_EQ(is_transversal({0}, fam), through == fam.size());
}

TEST(LocallyLongest, Examples) {
    EXPECT_TRUE(is_locally_longest(enumerate_longest(petersen_graph(), Kind::Path).path(0), petersen_graph()));
    EXPECT_FALSE(is_locally_longest(Path{{0, 1}}, cycle_graph(4)));
    EXPECT_TRUE(is_locally_longest(Path{{0, 1, 2, 3}}, complete_graph(4)));
}

TEST(LocallyLongest, MatchesPathRecount) {
    for (int trial = 0; trial < 40; ++trial) {
        Rng rng = Rng::stream(25, static_cast<std::uint64_t>(trial));
        Graph g = random_connected(rng.uniform_int(2, 8), 0.3, rng);
        std::map<std::pair<Vertex, Vertex>, int> best;
        oracle::for_each_directed_path(g, [&](const std::vector<Vertex>& p) {
            auto key = std::pair{p.front(), p.back()};
            best[key] = std::max(best[key], static_cast<int>(p.size()) - 1);
        });
        oracle::for_each_directed_path(g, [&](const std::vector<Vertex>& p) {
            bool expect = static_cast<int>(p.size()) - 1 == best[{p.front(), p.back()}];
            EXPECT_EQ(is_locally_longest(Path{p}, g), expect);
        });
    }
}

TEST(Geodetic, Examples) {
    Cycle c6{{0, 1, 2, 3, 4, 5}};
    EXPECT_TRUE(is_geodetic(c6, cycle_graph(6)));
    Graph chord = cycle_graph(6);
    chord.add_edge(0, 3);
    EXPECT_FALSE(is_geodetic(c6, chord));
    EXPECT_TRUE(is_geodetic(Cycle{{0, 1, 2}}, complete_graph(4)));
}

TEST(Folklore, TwoLongestPathsMeetOnRandomGraphs) {
    for (int trial = 0; trial < 100; ++trial) {
        Rng rng = Rng::stream(26, static_cast<std::uint64_t>(trial));
        Graph g = random_connected(rng.uniform_int(1, 11), rng.uniform(0.0, 0.3), rng);
        LongestFamily fam = enumerate_longest(g, Kind::Path);
        for (std::size_t i = 0; i < fam.size(); ++i)
            for (std::size_t j = i + 1; j < fam.size(); ++j) EXPECT_NE(fam.masks[i] & fam.masks[j], 0u);
    }
}
