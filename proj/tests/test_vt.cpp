#include <gtest/gtest.h>

#include "lpt/canon.hpp"
#include "lpt/vt.hpp"

using namespace lpt;

namespace {

std::string cyclic_group_table(int k, const std::vector<int>& gens) {
    std::string out = std::to_string(k) + "\n";
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) out += std::to_string((i + j) % k) + (j + 1 < k ? " " : "\n");
    }
    for (std::size_t i = 0; i < gens.size(); ++i) out += std::to_string(gens[i]) + (i + 1 < gens.size() ? " " : "\n");
    return out;
}

}  // namespace

TEST(Circulant, Examples) {
    EXPECT_EQ(gen_circulant(6, {1}).graph, cycle_graph(6));
    EXPECT_EQ(gen_circulant(5, {1, 2}).graph, complete_graph(5));
    VTInstance c = gen_circulant(10, {2, 5});
    EXPECT_EQ(c.graph.order(), 10);
    EXPECT_EQ(c.degree, 3);
    for (Vertex v = 0; v < 10; ++v) EXPECT_EQ(c.graph.degree(v), 3);
}

TEST(Circulant, Errors) {
    EXPECT_THROW(gen_circulant(8, {2}), InputError);
    EXPECT_THROW(gen_circulant(8, {}), InputError);
    EXPECT_THROW(gen_circulant(8, {5}), InputError);
    EXPECT_THROW(gen_circulant(8, {1, 1}), InputError);
}

TEST(Circulant, EnumerationIsVertexTransitive) {
    for (int n = 3; n <= 10; ++n)
        for (const auto& inst : all_connected_circulants(n)) EXPECT_TRUE(is_vertex_transitive(inst.graph)) << inst.name;
    // Subsets of {1,2,3} with gcd 1 with 6: {1},{1,2},{1,3},{2,3},{1,2,3}.
    EXPECT_EQ(all_connected_circulants(6).size(), 5u);
}

TEST(Cayley, CyclicGroupGivesCirculant) {
    VTInstance inst = gen_cayley(parse_group_table(cyclic_group_table(8, {1, 7, 3, 5})));
    EXPECT_EQ(inst.graph, gen_circulant(8, {1, 3}).graph);
    EXPECT_EQ(inst.degree, 4);
}

TEST(Cayley, KleinFourGroup) {
    // V_4 = Z_2 x Z_2 with elements 0..3 and i * j = i xor j.
    std::string table = "4\n0 1 2 3\n1 0 3 2\n2 3 0 1\n3 2 1 0\n1 2\n";
    VTInstance inst = gen_cayley(parse_group_table(table));
    EXPECT_TRUE(isomorphic(inst.graph, cycle_graph(4)));
}

TEST(Cayley, Errors) {
    EXPECT_THROW(gen_cayley(parse_group_table(cyclic_group_table(6, {1}))), InputError);     // not symmetric
    EXPECT_THROW(gen_cayley(parse_group_table(cyclic_group_table(6, {0}))), InputError);     // identity
    EXPECT_THROW(gen_cayley(parse_group_table(cyclic_group_table(6, {2, 4}))), InputError);  // disconnected
    EXPECT_THROW(gen_cayley(parse_group_table("2\n0 1\n1 1\n1\n")), InputError);              // not a group
    EXPECT_THROW(parse_group_table("2\n0 1\n1\n"), InputError);
}

TEST(Named, PetersenVerified) {
    VTInstance p = gen_named(petersen_graph(), "petersen");
    EXPECT_EQ(p.degree, 3);
    EXPECT_THROW(gen_named(path_graph(4), "p4"), InputError);
}

TEST(Corollary, Examples) {
    CorollaryReport c6 = corollary_check(gen_circulant(6, {1}));
    EXPECT_EQ(c6.ell, 5);
    EXPECT_EQ(c6.lpt, 1);
    CorollaryReport p = corollary_check(gen_named(petersen_graph(), "petersen"));
    EXPECT_EQ(p.ell, 9);
    EXPECT_EQ(p.ell_cycle, 9);
    EXPECT_EQ(p.connectivity, 3);
}

TEST(Corollary, AllCirculantsUpToTwelve) {
    for (int n = 3; n <= 12; ++n)
        for (const auto& inst : all_connected_circulants(n)) {
            CorollaryReport r = corollary_check(inst);
            EXPECT_GE(r.ell, r.n / r.lpt - 1);
        }
}
