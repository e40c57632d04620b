#ifndef LPT_BLOCK_CUT_TREE_HPP
#define LPT_BLOCK_CUT_TREE_HPP

#include <algorithm>
#include <functional>
#include <utility>
#include <vector>

#include "lpt/graph.hpp"

namespace lpt {

// Blocks (maximal 2-connected subgraphs or K_2's) and the vertex-block
// incidence tree. Tree nodes 0..n-1 are the vertices of G, node n + b is
// block b.
struct BlockCutTree {
    int n = 0;
    std::vector<VertexSet> blocks;
    VertexSet cut_vertices;
    std::vector<std::vector<int>> blocks_of;  // per vertex, ascending block ids

    int node_count() const { return n + static_cast<int>(blocks.size()); }
    int block_node(int b) const { return n + b; }

    std::vector<std::pair<int, int>> tree_edges() const {
        std::vector<std::pair<int, int>> out;
        for (int b = 0; b < static_cast<int>(blocks.size()); ++b)
            for (Vertex v : blocks[static_cast<std::size_t>(b)]) out.emplace_back(v, block_node(b));
        return out;
    }
};

inline BlockCutTree block_cut_tree(const Graph& g) {
    if (g.order() == 0 || !is_connected(g)) throw InputError("block_cut_tree needs a connected graph");
    const int n = g.order();
    BlockCutTree t;
    t.n = n;
    if (n == 1) {
        t.blocks.push_back({0});
    } else {
        std::vector<int> disc(static_cast<std::size_t>(n), -1);
        std::vector<int> low(static_cast<std::size_t>(n), 0);
        std::vector<Edge> stack;
        int timer = 0;
        std::function<void(Vertex, Vertex)> dfs = [&](Vertex u, Vertex parent) {
            disc[static_cast<std::size_t>(u)] = low[static_cast<std::size_t>(u)] = timer++;
            for (Vertex w : g.neighbors(u)) {
                if (w == parent) continue;
                if (disc[static_cast<std::size_t>(w)] == -1) {
                    stack.emplace_back(u, w);
                    dfs(w, u);
                    low[static_cast<std::size_t>(u)] = std::min(low[static_cast<std::size_t>(u)], low[static_cast<std::size_t>(w)]);
                    if (low[static_cast<std::size_t>(w)] >= disc[static_cast<std::size_t>(u)]) {
                        std::vector<Vertex> members;
                        Edge top;
                        do {
                            top = stack.back();
                            stack.pop_back();
                            members.push_back(top.u);
                            members.push_back(top.v);
                        } while (!(top == Edge(u, w)));
                        t.blocks.push_back(make_vertex_set(std::move(members)));
                    }
                } else if (disc[static_cast<std::size_t>(w)] < disc[static_cast<std::size_t>(u)]) {
                    stack.emplace_back(u, w);
                    low[static_cast<std::size_t>(u)] = std::min(low[static_cast<std::size_t>(u)], disc[static_cast<std::size_t>(w)]);
                }
            }
        };
        dfs(0, -1);
    }
    std::sort(t.blocks.begin(), t.blocks.end());
    t.blocks_of.assign(static_cast<std::size_t>(n), {});
    for (int b = 0; b < static_cast<int>(t.blocks.size()); ++b)
        for (Vertex v : t.blocks[static_cast<std::size_t>(b)]) t.blocks_of[static_cast<std::size_t>(v)].push_back(b);
    for (int v = 0; v < n; ++v)
        if (t.blocks_of[static_cast<std::size_t>(v)].size() > 1) t.cut_vertices.push_back(v);
    return t;
}

}  // namespace lpt

#endif  // LPT_BLOCK_CUT_TREE_HPP
