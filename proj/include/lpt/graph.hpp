#ifndef LPT_GRAPH_HPP
#define LPT_GRAPH_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lpt/errors.hpp"

namespace lpt {

using Vertex = int;

// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

inline VertexSet make_vertex_set(std::vector<Vertex> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline bool contains(const VertexSet& s, Vertex v) { return std::binary_search(s.begin(), s.end(), v); }

inline bool intersects(const VertexSet& a, const VertexSet& b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i == *j) return true;
        if (*i < *j) ++i; else ++j;
    }
    return false;
}

// Undirected edge, normalized so that u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;

    bool has(Vertex x) const { return x == u || x == v; }
    Vertex other(Vertex x) const { return x == u ? v : u; }
};

// Simple undirected graph on vertices 0..n-1 with sorted neighbor lists.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(static_cast<std::size_t>(n)) {
        if (n < 0) throw InputError("negative vertex count");
    }

    static Graph from_edges(int n, std::span<const Edge> edges) {
        Graph g(n);
        for (const auto& e : edges) g.add_edge(e.u, e.v);
        return g;
    }

    static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    int order() const noexcept { return static_cast<int>(adj_.size()); }
    std::size_t size() const noexcept { return edge_count_; }

    bool valid_vertex(Vertex v) const noexcept { return v >= 0 && v < order(); }

    void add_edge(Vertex u, Vertex v) {
        if (!valid_vertex(u) || !valid_vertex(v))
            throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") has an invalid vertex id");
        if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
        auto& nu = adj_[static_cast<std::size_t>(u)];
        auto it = std::lower_bound(nu.begin(), nu.end(), v);
        if (it != nu.end() && *it == v)
            throw InputError("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        nu.insert(it, v);
        auto& nv = adj_[static_cast<std::size_t>(v)];
        nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
        ++edge_count_;
    }

    bool has_edge(Vertex u, Vertex v) const {
        if (!valid_vertex(u) || !valid_vertex(v)) return false;
        const auto& nu = adj_[static_cast<std::size_t>(u)];
        return std::binary_search(nu.begin(), nu.end(), v);
    }

    std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }

    int max_degree() const {
        int d = 0;
        for (const auto& nb : adj_) d = std::max(d, static_cast<int>(nb.size()));
        return d;
    }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(edge_count_);
        for (int u = 0; u < order(); ++u)
            for (Vertex v : neighbors(u))
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    VertexSet vertices() const {
        VertexSet out(adj_.size());
        for (int i = 0; i < order(); ++i) out[static_cast<std::size_t>(i)] = i;
        return out;
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<Vertex>> adj_;
    std::size_t edge_count_ = 0;
};

inline void require_vertex(const Graph& g, Vertex v) {
    if (!g.valid_vertex(v)) throw InputError("invalid vertex id " + std::to_string(v));
}

inline void require_vertices(const Graph& g, std::span<const Vertex> vs) {
    for (Vertex v : vs) require_vertex(g, v);
}

// Path given by its vertex sequence; |P| is the number of edges.
struct Path {
    std::vector<Vertex> vertices;

    int length() const { return vertices.empty() ? 0 : static_cast<int>(vertices.size()) - 1; }
    Vertex front() const { return vertices.front(); }
    Vertex back() const { return vertices.back(); }
    VertexSet vertex_set() const { return make_vertex_set(vertices); }

    friend bool operator==(const Path&, const Path&) = default;
    friend auto operator<=>(const Path&, const Path&) = default;
};

// Cycle given by its cyclic vertex sequence (at least three vertices); |C| is
// the number of vertices, which equals the number of edges.
struct Cycle {
    std::vector<Vertex> vertices;

    int length() const { return static_cast<int>(vertices.size()); }
    VertexSet vertex_set() const { return make_vertex_set(vertices); }

    friend bool operator==(const Cycle&, const Cycle&) = default;
    friend auto operator<=>(const Cycle&, const Cycle&) = default;
};

inline bool all_distinct(std::vector<Vertex> v) {
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) == v.end();
}

inline bool is_path_in(const Graph& g, const Path& p) {
    if (p.vertices.empty()) return false;
    for (Vertex v : p.vertices)
        if (!g.valid_vertex(v)) return false;
    if (!all_distinct(p.vertices)) return false;
    for (std::size_t i = 1; i < p.vertices.size(); ++i)
        if (!g.has_edge(p.vertices[i - 1], p.vertices[i])) return false;
    return true;
}

inline bool is_cycle_in(const Graph& g, const Cycle& c) {
    const auto& vs = c.vertices;
    if (vs.size() < 3) return false;
    for (Vertex v : vs)
        if (!g.valid_vertex(v)) return false;
    if (!all_distinct(vs)) return false;
    for (std::size_t i = 0; i < vs.size(); ++i)
        if (!g.has_edge(vs[i], vs[(i + 1) % vs.size()])) return false;
    return true;
}

inline bool cycle_has_edge(const Cycle& c, Edge e) {
    const auto& vs = c.vertices;
    for (std::size_t i = 0; i < vs.size(); ++i)
        if (Edge(vs[i], vs[(i + 1) % vs.size()]) == e) return true;
    return false;
}

// Paths are stored with the smaller endpoint first.
inline Path canonical(Path p) {
    if (p.vertices.size() > 1 && p.vertices.front() > p.vertices.back())
        std::reverse(p.vertices.begin(), p.vertices.end());
    return p;
}

// Lexicographically least rotation/reflection: smallest vertex first, then
// its smaller cycle neighbor.
inline Cycle canonical(Cycle c) {
    auto& vs = c.vertices;
    if (vs.empty()) return c;
    auto it = std::min_element(vs.begin(), vs.end());
    std::rotate(vs.begin(), it, vs.end());
    if (vs.size() > 2 && vs.back() < vs[1]) std::reverse(vs.begin() + 1, vs.end());
    return c;
}

// Distance of positions i, j along a cycle of length len.
inline int cyclic_distance(int i, int j, int len) {
    int d = std::abs(i - j) % len;
    return std::min(d, len - d);
}

// Result of induced_subgraph: the subgraph plus the id maps in both directions.
struct Subgraph {
    Graph graph;
    std::vector<Vertex> to_host;    // local id -> host id
    std::vector<Vertex> from_host;  // host id -> local id, or -1

    Vertex lift(Vertex local) const { return to_host[static_cast<std::size_t>(local)]; }
    std::vector<Vertex> lift(std::span<const Vertex> local) const {
        std::vector<Vertex> out;
        out.reserve(local.size());
        for (Vertex v : local) out.push_back(lift(v));
        return out;
    }
};

// G[keep], with local ids assigned in increasing host-id order.
inline Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
    require_vertices(g, keep);
    VertexSet kept = make_vertex_set(std::vector<Vertex>(keep.begin(), keep.end()));
    Subgraph s;
    s.to_host = kept;
    s.from_host.assign(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < kept.size(); ++i) s.from_host[static_cast<std::size_t>(kept[i])] = static_cast<Vertex>(i);
    s.graph = Graph(static_cast<int>(kept.size()));
    for (std::size_t i = 0; i < kept.size(); ++i)
        for (Vertex w : g.neighbors(kept[i])) {
            Vertex j = s.from_host[static_cast<std::size_t>(w)];
            if (j > static_cast<Vertex>(i)) s.graph.add_edge(static_cast<Vertex>(i), j);
        }
    return s;
}

// G - X.
inline Subgraph delete_vertices(const Graph& g, std::span<const Vertex> removed) {
    std::vector<char> drop(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v : removed) {
        require_vertex(g, v);
        drop[static_cast<std::size_t>(v)] = 1;
    }
    std::vector<Vertex> keep;
    for (int v = 0; v < g.order(); ++v)
        if (!drop[static_cast<std::size_t>(v)]) keep.push_back(v);
    return induced_subgraph(g, keep);
}

inline constexpr int kUnreachable = -1;

// Breadth-first distances from `source`; kUnreachable where no path exists.
inline std::vector<int> bfs_distances(const Graph& g, Vertex source) {
    require_vertex(g, source);
    std::vector<int> dist(static_cast<std::size_t>(g.order()), kUnreachable);
    std::deque<Vertex> queue{source};
    dist[static_cast<std::size_t>(source)] = 0;
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        for (Vertex w : g.neighbors(u))
            if (dist[static_cast<std::size_t>(w)] == kUnreachable) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

inline std::optional<int> distance(const Graph& g, Vertex u, Vertex v) {
    require_vertex(g, v);
    int d = bfs_distances(g, u)[static_cast<std::size_t>(v)];
    if (d == kUnreachable) return std::nullopt;
    return d;
}

inline std::vector<std::vector<int>> all_pairs_distances(const Graph& g) {
    std::vector<std::vector<int>> out;
    out.reserve(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) out.push_back(bfs_distances(g, v));
    return out;
}

// A shortest u-v path; ties broken towards smaller vertex ids.
inline std::optional<Path> shortest_path(const Graph& g, Vertex u, Vertex v) {
    auto dist_from_v = bfs_distances(g, v);
    if (dist_from_v[static_cast<std::size_t>(u)] == kUnreachable) return std::nullopt;
    Path p{{u}};
    Vertex cur = u;
    while (cur != v) {
        for (Vertex w : g.neighbors(cur))
            if (dist_from_v[static_cast<std::size_t>(w)] == dist_from_v[static_cast<std::size_t>(cur)] - 1) {
                cur = w;
                break;
            }
        p.vertices.push_back(cur);
    }
    return p;
}

// Component id per vertex (ids in order of smallest member) and the count.
inline std::pair<std::vector<int>, int> connected_components(const Graph& g) {
    std::vector<int> comp(static_cast<std::size_t>(g.order()), -1);
    int count = 0;
    for (int s = 0; s < g.order(); ++s) {
        if (comp[static_cast<std::size_t>(s)] != -1) continue;
        std::vector<Vertex> stack{s};
        comp[static_cast<std::size_t>(s)] = count;
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(u))
                if (comp[static_cast<std::size_t>(w)] == -1) {
                    comp[static_cast<std::size_t>(w)] = count;
                    stack.push_back(w);
                }
        }
        ++count;
    }
    return {std::move(comp), count};
}

inline bool is_connected(const Graph& g) {
    return g.order() <= 1 || connected_components(g).second == 1;
}

// Connected and 2-regular on at least three vertices.
inline bool is_cycle_graph(const Graph& g) {
    if (g.order() < 3 || !is_connected(g)) return false;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) != 2) return false;
    return true;
}

// Bitmask adjacency for the exhaustive search kernels (n <= 64).
using Mask = std::uint64_t;

inline Mask bit(Vertex v) { return Mask{1} << v; }

inline Mask mask_of(std::span<const Vertex> vs) {
    Mask m = 0;
    for (Vertex v : vs) m |= bit(v);
    return m;
}

inline std::vector<Mask> neighbor_masks(const Graph& g) {
    if (g.order() > 64) throw OracleInfeasible("exhaustive search kernels support at most 64 vertices");
    std::vector<Mask> out(static_cast<std::size_t>(g.order()), 0);
    for (int v = 0; v < g.order(); ++v) out[static_cast<std::size_t>(v)] = mask_of(g.neighbors(v));
    return out;
}

// Vertices reachable from `start` inside `allowed` (start itself included).
inline Mask reachable_within(const std::vector<Mask>& nbr, Vertex start, Mask allowed) {
    Mask seen = bit(start);
    Mask frontier = seen;
    while (frontier) {
        Vertex v = std::countr_zero(frontier);
        frontier &= frontier - 1;
        Mask fresh = nbr[static_cast<std::size_t>(v)] & allowed & ~seen;
        seen |= fresh;
        frontier |= fresh;
    }
    return seen;
}

inline std::string to_string(const std::vector<Vertex>& vs) {
    std::string s = "[";
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(vs[i]);
    }
    return s + "]";
}

}  // namespace lpt

#endif  // LPT_GRAPH_HPP
