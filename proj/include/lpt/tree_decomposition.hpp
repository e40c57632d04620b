#ifndef LPT_TREE_DECOMPOSITION_HPP
#define LPT_TREE_DECOMPOSITION_HPP

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lpt/connectivity.hpp"
#include "lpt/graph.hpp"

namespace lpt {

enum class TorsoKind { Cycle, ThreeConnected };

inline const char* to_string(TorsoKind k) { return k == TorsoKind::Cycle ? "cycle" : "3-connected"; }

struct TreeDecomposition {
    std::vector<VertexSet> bags;
    std::vector<std::pair<int, int>> tree_edges;
    std::vector<TorsoKind> torso_kinds;

    int bag_count() const { return static_cast<int>(bags.size()); }

    std::vector<std::vector<int>> tree_adjacency() const {
        std::vector<std::vector<int>> adj(bags.size());
        for (auto [s, t] : tree_edges) {
            adj[static_cast<std::size_t>(s)].push_back(t);
            adj[static_cast<std::size_t>(t)].push_back(s);
        }
        for (auto& a : adj) std::sort(a.begin(), a.end());
        return adj;
    }

    int adhesion() const {
        int best = 0;
        for (auto [s, t] : tree_edges)
            best = std::max(best, static_cast<int>(set_intersection(bags[static_cast<std::size_t>(s)], bags[static_cast<std::size_t>(t)]).size()));
        return best;
    }
};

struct DecompositionReport {
    bool valid = true;
    int adhesion = 0;
    std::vector<std::string> violations;

    void fail(std::string message) {
        valid = false;
        violations.push_back(std::move(message));
    }
};

// G[B_t] plus a complete graph on every adhesion set of a tree edge at t.
inline Subgraph torso(const Graph& g, const TreeDecomposition& td, int t) {
    Subgraph s = induced_subgraph(g, td.bags[static_cast<std::size_t>(t)]);
    const auto adj = td.tree_adjacency();
    for (int nb : adj[static_cast<std::size_t>(t)]) {
        VertexSet shared = set_intersection(td.bags[static_cast<std::size_t>(t)], td.bags[static_cast<std::size_t>(nb)]);
        for (std::size_t i = 0; i < shared.size(); ++i)
            for (std::size_t j = i + 1; j < shared.size(); ++j) {
                Vertex a = s.from_host[static_cast<std::size_t>(shared[i])];
                Vertex b = s.from_host[static_cast<std::size_t>(shared[j])];
                if (!s.graph.has_edge(a, b)) s.graph.add_edge(a, b);
            }
    }
    return s;
}

// Checks the tree-decomposition axioms, adhesion <= 2 and the declared torso
// kinds, collecting every violation.
inline DecompositionReport verify_tree_decomposition(const Graph& g, const TreeDecomposition& td) {
    DecompositionReport rep;
    const int k = td.bag_count();
    if (k == 0) {
        rep.fail("no bags");
        return rep;
    }
    if (static_cast<int>(td.torso_kinds.size()) != k) rep.fail("torso kind count differs from bag count");
    for (int t = 0; t < k; ++t)
        for (Vertex v : td.bags[static_cast<std::size_t>(t)])
            if (!g.valid_vertex(v)) {
                rep.fail("bag " + std::to_string(t) + " holds invalid vertex " + std::to_string(v));
                return rep;
            }
    // T must be a tree.
    bool tree_ok = static_cast<int>(td.tree_edges.size()) == k - 1;
    for (auto [s, t] : td.tree_edges)
        if (s < 0 || t < 0 || s >= k || t >= k || s == t) tree_ok = false;
    if (tree_ok) {
        Graph tree(k);
        for (auto [s, t] : td.tree_edges) {
            if (tree.has_edge(s, t)) {
                tree_ok = false;
                break;
            }
            tree.add_edge(s, t);
        }
        if (tree_ok && !is_connected(tree)) tree_ok = false;
    }
    if (!tree_ok) {
        rep.fail("bag graph is not a tree");
        return rep;
    }
    auto adj = td.tree_adjacency();
    // Covering.
    std::vector<std::vector<int>> bags_of(static_cast<std::size_t>(g.order()));
    for (int t = 0; t < k; ++t)
        for (Vertex v : td.bags[static_cast<std::size_t>(t)]) bags_of[static_cast<std::size_t>(v)].push_back(t);
    for (int v = 0; v < g.order(); ++v)
        if (bags_of[static_cast<std::size_t>(v)].empty()) rep.fail("vertex " + std::to_string(v) + " is in no bag");
    // Every edge inside a bag.
    for (const Edge& e : g.edges()) {
        bool covered = false;
        for (int t : bags_of[static_cast<std::size_t>(e.u)])
            if (contains(td.bags[static_cast<std::size_t>(t)], e.v)) covered = true;
        if (!covered) rep.fail("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") is in no bag");
    }
    // Bags containing each vertex induce a subtree.
    for (int v = 0; v < g.order(); ++v) {
        const auto& mine = bags_of[static_cast<std::size_t>(v)];
        if (mine.empty()) continue;
        std::vector<char> holds(static_cast<std::size_t>(k), 0), seen(static_cast<std::size_t>(k), 0);
        for (int t : mine) holds[static_cast<std::size_t>(t)] = 1;
        std::vector<int> stack{mine.front()};
        seen[static_cast<std::size_t>(mine.front())] = 1;
        std::size_t reached = 0;
        while (!stack.empty()) {
            int t = stack.back();
            stack.pop_back();
            ++reached;
            for (int u : adj[static_cast<std::size_t>(t)])
                if (holds[static_cast<std::size_t>(u)] && !seen[static_cast<std::size_t>(u)]) {
                    seen[static_cast<std::size_t>(u)] = 1;
                    stack.push_back(u);
                }
        }
        if (reached != mine.size()) rep.fail("bags containing vertex " + std::to_string(v) + " are not a subtree");
    }
    rep.adhesion = td.adhesion();
    if (rep.adhesion > 2) rep.fail("adhesion " + std::to_string(rep.adhesion) + " exceeds 2");
    // Torso kinds.
    for (int t = 0; t < k && t < static_cast<int>(td.torso_kinds.size()); ++t) {
        Graph h = torso(g, td, t).graph;
        bool ok = td.torso_kinds[static_cast<std::size_t>(t)] == TorsoKind::Cycle ? is_cycle_graph(h) : is_k_connected(h, 3);
        if (!ok)
            rep.fail("torso of bag " + std::to_string(t) + " is not " + to_string(td.torso_kinds[static_cast<std::size_t>(t)]));
    }
    return rep;
}

namespace detail {

struct TuttePiece {
    VertexSet vertices;
    std::vector<Edge> real_edges;
    std::vector<std::pair<Edge, int>> virtual_edges;
};

}  // namespace detail

// Adhesion-<=2 tree decomposition whose torsos are cycles or 3-connected.
// Repeatedly splits a torso along its smallest 2-separator {a, b} into one
// part per component of torso - {a, b}, linking the parts through virtual
// edges ab, until every torso is a cycle or 3-connected.
inline TreeDecomposition tutte_decomposition(const Graph& g) {
    if (g.order() < 3 || !is_two_connected(g)) throw InputError("tutte_decomposition needs a 2-connected graph");
    std::vector<detail::TuttePiece> work{{g.vertices(), g.edges(), {}}};
    std::vector<detail::TuttePiece> done;
    std::vector<TorsoKind> kinds;
    int next_virtual = 0;
    while (!work.empty()) {
        detail::TuttePiece piece = std::move(work.back());
        work.pop_back();
        const VertexSet& vs = piece.vertices;
        auto local = [&](Vertex v) {
            return static_cast<Vertex>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
        };
        Graph h(static_cast<int>(vs.size()));
        auto add = [&](Edge e) {
            if (!h.has_edge(local(e.u), local(e.v))) h.add_edge(local(e.u), local(e.v));
        };
        for (Edge e : piece.real_edges) add(e);
        for (const auto& [e, id] : piece.virtual_edges) add(e);
        if (is_cycle_graph(h)) {
            done.push_back(std::move(piece));
            kinds.push_back(TorsoKind::Cycle);
            continue;
        }
        if (is_k_connected(h, 3)) {
            done.push_back(std::move(piece));
            kinds.push_back(TorsoKind::ThreeConnected);
            continue;
        }
        // Smallest pair whose removal disconnects the torso.
        Vertex sa = -1, sb = -1;
        std::vector<int> comp;
        int comp_count = 0;
        for (Vertex a = 0; a < h.order() && sa < 0; ++a)
            for (Vertex b = a + 1; b < h.order() && sa < 0; ++b) {
                Subgraph rest = delete_vertices(h, std::vector<Vertex>{a, b});
                auto [c, count] = connected_components(rest.graph);
                if (count >= 2) {
                    sa = a;
                    sb = b;
                    comp.assign(static_cast<std::size_t>(h.order()), -1);
                    for (int i = 0; i < rest.graph.order(); ++i) comp[static_cast<std::size_t>(rest.lift(i))] = c[static_cast<std::size_t>(i)];
                    comp_count = count;
                }
            }
        if (sa < 0) throw InternalError("torso is neither a cycle, 3-connected, nor 2-separable");
        const Vertex ha = vs[static_cast<std::size_t>(sa)];
        const Vertex hb = vs[static_cast<std::size_t>(sb)];
        std::vector<detail::TuttePiece> parts(static_cast<std::size_t>(comp_count));
        for (int i = 0; i < h.order(); ++i)
            if (comp[static_cast<std::size_t>(i)] >= 0) parts[static_cast<std::size_t>(comp[static_cast<std::size_t>(i)])].vertices.push_back(vs[static_cast<std::size_t>(i)]);
        for (auto& p : parts) p.vertices = make_vertex_set(set_union(p.vertices, make_vertex_set({ha, hb})));
        auto part_of = [&](Edge e) {
            for (Vertex x : {e.u, e.v}) {
                int c = comp[static_cast<std::size_t>(local(x))];
                if (c >= 0) return c;
            }
            return 0;  // edge between the separator vertices
        };
        for (Edge e : piece.real_edges) parts[static_cast<std::size_t>(part_of(e))].real_edges.push_back(e);
        for (const auto& ve : piece.virtual_edges) parts[static_cast<std::size_t>(part_of(ve.first))].virtual_edges.push_back(ve);
        for (int j = 1; j < comp_count; ++j) {
            int id = next_virtual++;
            parts[0].virtual_edges.push_back({Edge(ha, hb), id});
            parts[static_cast<std::size_t>(j)].virtual_edges.push_back({Edge(ha, hb), id});
        }
        for (auto it = parts.rbegin(); it != parts.rend(); ++it) work.push_back(std::move(*it));
    }
    TreeDecomposition td;
    std::map<int, std::vector<int>> holders;
    for (int t = 0; t < static_cast<int>(done.size()); ++t) {
        td.bags.push_back(done[static_cast<std::size_t>(t)].vertices);
        for (const auto& ve : done[static_cast<std::size_t>(t)].virtual_edges) holders[ve.second].push_back(t);
    }
    for (const auto& [id, ts] : holders) {
        if (ts.size() != 2) throw InternalError("virtual edge not shared by exactly two pieces");
        td.tree_edges.emplace_back(std::min(ts[0], ts[1]), std::max(ts[0], ts[1]));
    }
    std::sort(td.tree_edges.begin(), td.tree_edges.end());
    td.torso_kinds = std::move(kinds);
    return td;
}

}  // namespace lpt

#endif  // LPT_TREE_DECOMPOSITION_HPP
