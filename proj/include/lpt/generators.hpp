#ifndef LPT_GENERATORS_HPP
#define LPT_GENERATORS_HPP

#include <vector>

#include "lpt/errors.hpp"
#include "lpt/graph.hpp"
#include "lpt/random.hpp"

namespace lpt {

inline void ensure_edge(Graph& g, Vertex u, Vertex v) {
    if (u != v && !g.has_edge(u, v)) g.add_edge(u, v);
}

inline Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw InputError("a cycle needs at least 3 vertices");
    Graph g = path_graph(n);
    g.add_edge(0, n - 1);
    return g;
}

inline Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

inline Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

// K_{1,leaves} with centre 0.
inline Graph star_graph(int leaves) { return complete_bipartite(1, leaves); }

// Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram on 5..9.
inline Graph petersen_graph() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return g;
}

// C_k x K_2: cycles 0..k-1 and k..2k-1 joined by rungs i -- k+i.
inline Graph prism_graph(int k) {
    if (k < 3) throw InputError("a prism needs k >= 3");
    Graph g(2 * k);
    for (int i = 0; i < k; ++i) {
        g.add_edge(i, (i + 1) % k);
        g.add_edge(k + i, k + (i + 1) % k);
        g.add_edge(i, k + i);
    }
    return g;
}

// P_k x K_2 with rails 0..k-1 and k..2k-1.
inline Graph ladder_graph(int k) {
    Graph g(2 * k);
    for (int i = 0; i < k; ++i) {
        if (i + 1 < k) {
            g.add_edge(i, i + 1);
            g.add_edge(k + i, k + i + 1);
        }
        g.add_edge(i, k + i);
    }
    return g;
}

// Two triangles sharing vertex 0.
inline Graph bowtie_graph() { return Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}}); }

inline Graph circulant_graph(int n, const std::vector<int>& jumps) {
    Graph g(n);
    for (int j : jumps) {
        if (j <= 0 || 2 * j > n) throw InputError("circulant jump out of range");
        for (int i = 0; i < n; ++i) ensure_edge(g, i, (i + j) % n);
    }
    return g;
}

inline Graph random_gnp(int n, double p, Rng& rng) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.coin(p)) g.add_edge(i, j);
    return g;
}

// Uniform random recursive tree plus independent extra edges.
inline Graph random_connected(int n, double extra_p, Rng& rng) {
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(v, rng.uniform_int(0, v - 1));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!g.has_edge(i, j) && rng.coin(extra_p)) g.add_edge(i, j);
    return g;
}

// Starts from a random cycle and adds ears (paths between two distinct
// existing vertices) until n vertices exist; then sprinkles chords.
inline Graph random_two_connected(int n, double chord_p, Rng& rng) {
    if (n < 3) throw InputError("a 2-connected graph needs at least 3 vertices");
    int first = rng.uniform_int(3, n);
    Graph g(n);
    for (int i = 0; i < first; ++i) g.add_edge(i, (i + 1) % first);
    int used = first;
    while (used < n) {
        int len = rng.uniform_int(1, n - used);
        int a = rng.uniform_int(0, used - 1);
        int b = rng.uniform_int(0, used - 2);
        if (b >= a) ++b;
        Vertex prev = a;
        for (int i = 0; i < len; ++i) {
            g.add_edge(prev, used);
            prev = used++;
        }
        g.add_edge(prev, b);
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!g.has_edge(i, j) && rng.coin(chord_p)) g.add_edge(i, j);
    return g;
}

// Uniform random relabeling.
inline Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
    Graph h(g.order());
    for (const Edge& e : g.edges()) h.add_edge(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]);
    return h;
}

inline Graph random_relabel(const Graph& g, Rng& rng) {
    std::vector<Vertex> perm = g.vertices();
    rng.shuffle(perm);
    return relabel(g, perm);
}

}  // namespace lpt

#endif  // LPT_GENERATORS_HPP
