#ifndef LPT_LEMMAS_MATCHING_HPP
#define LPT_LEMMAS_MATCHING_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "lpt/checks.hpp"
#include "lpt/errors.hpp"
#include "lpt/graph.hpp"
#include "lpt/lemmas/cubic.hpp"
#include "lpt/random.hpp"

namespace lpt {

// Two vertex-disjoint paths and a matching whose edges each join P1 to P2.
// Matching edges are stored as (vertex on P1, vertex on P2).
struct MatchingInstance {
    Path p1;
    Path p2;
    std::vector<std::pair<Vertex, Vertex>> m;

    int vertex_count() const {
        Vertex top = -1;
        for (const Path* p : {&p1, &p2})
            for (Vertex v : p->vertices) top = std::max(top, v);
        return top + 1;
    }

    Graph union_graph() const {
        Graph g(vertex_count());
        for (const Path* p : {&p1, &p2})
            for (std::size_t i = 1; i < p->vertices.size(); ++i) g.add_edge(p->vertices[i - 1], p->vertices[i]);
        for (auto [a, b] : m) g.add_edge(a, b);
        return g;
    }
};

inline std::string matching_instance_violation(const MatchingInstance& inst) {
    if (inst.p1.vertices.empty() || inst.p2.vertices.empty()) return "paths must be nonempty";
    std::vector<Vertex> all = inst.p1.vertices;
    all.insert(all.end(), inst.p2.vertices.begin(), inst.p2.vertices.end());
    for (Vertex v : all)
        if (v < 0) return "negative vertex id";
    if (!all_distinct(all)) return "paths are not vertex-disjoint simple paths";
    VertexSet s1 = inst.p1.vertex_set(), s2 = inst.p2.vertex_set();
    std::vector<Vertex> ends;
    for (auto [a, b] : inst.m) {
        if (!contains(s1, a) || !contains(s2, b)) return "matching edge does not join P1 to P2";
        ends.push_back(a);
        ends.push_back(b);
    }
    if (!all_distinct(ends)) return "matching edges share an endpoint";
    return {};
}

inline void validate_matching_instance(const MatchingInstance& inst) {
    std::string why = matching_instance_violation(inst);
    if (!why.empty()) throw InputError("invalid matching instance: " + why);
}

// Accepts matching edges in either orientation and stores them P1-first.
inline MatchingInstance make_matching_instance(Path p1, Path p2, const std::vector<std::pair<Vertex, Vertex>>& edges) {
    MatchingInstance inst{std::move(p1), std::move(p2), {}};
    VertexSet s1 = inst.p1.vertex_set();
    for (auto [a, b] : edges) inst.m.emplace_back(contains(s1, a) ? a : b, contains(s1, a) ? b : a);
    validate_matching_instance(inst);
    return inst;
}

inline int count_matching_edges(const Path& p, const MatchingInstance& inst) {
    int count = 0;
    for (std::size_t i = 1; i < p.vertices.size(); ++i) {
        Edge x(p.vertices[i - 1], p.vertices[i]);
        for (auto [a, b] : inst.m)
            if (Edge(a, b) == x) ++count;
    }
    return count;
}

namespace detail {

inline int index_in(const Path& p, Vertex v) {
    auto it = std::find(p.vertices.begin(), p.vertices.end(), v);
    return it == p.vertices.end() ? -1 : static_cast<int>(it - p.vertices.begin());
}

// Vertices of p from x to y inclusive, in that direction.
inline std::vector<Vertex> subpath(const Path& p, Vertex x, Vertex y) {
    int i = index_in(p, x), j = index_in(p, y);
    std::vector<Vertex> out;
    if (i <= j)
        for (int k = i; k <= j; ++k) out.push_back(p.vertices[static_cast<std::size_t>(k)]);
    else
        for (int k = i; k >= j; --k) out.push_back(p.vertices[static_cast<std::size_t>(k)]);
    return out;
}

}  // namespace detail

// Contracts every path edge with at most one matched end; what remains of
// each path is its matched vertices in path order. Vertex ids are kept.
inline MatchingInstance contract_instance(const MatchingInstance& inst) {
    validate_matching_instance(inst);
    std::vector<char> matched(static_cast<std::size_t>(inst.vertex_count()), 0);
    for (auto [a, b] : inst.m) matched[static_cast<std::size_t>(a)] = matched[static_cast<std::size_t>(b)] = 1;
    MatchingInstance out;
    for (Vertex v : inst.p1.vertices)
        if (matched[static_cast<std::size_t>(v)]) out.p1.vertices.push_back(v);
    for (Vertex v : inst.p2.vertices)
        if (matched[static_cast<std::size_t>(v)]) out.p2.vertices.push_back(v);
    out.m = inst.m;
    return out;
}

// Auxiliary almost-cubic graph of a contracted instance with |M| = m
// divisible by 3: vertices u_1..u_m (ids 0..m-1, the path P1), the edge
// e = u_1 u_m, and w_j (id m + j) joined to the partners of the j-th triple
// of consecutive P2 vertices.
struct MatchingAuxiliary {
    CubicInstance cubic;
    std::vector<Vertex> u;                     // auxiliary id -> host vertex on P1
    std::vector<std::array<Vertex, 3>> triples;  // per w: host P2 vertices in path order
};

inline MatchingAuxiliary matching_auxiliary(const MatchingInstance& contracted) {
    const int m = static_cast<int>(contracted.m.size());
    if (m < 3 || m % 3 != 0) throw InputError("auxiliary graph needs |M| divisible by 3 and at least 3");
    if (static_cast<int>(contracted.p1.vertices.size()) != m || static_cast<int>(contracted.p2.vertices.size()) != m)
        throw InputError("auxiliary graph needs a contracted instance");
    MatchingAuxiliary aux;
    aux.u = contracted.p1.vertices;
    std::vector<int> aux_of(static_cast<std::size_t>(contracted.vertex_count()), -1);
    for (int i = 0; i < m; ++i) aux_of[static_cast<std::size_t>(aux.u[static_cast<std::size_t>(i)])] = i;
    std::vector<Vertex> partner(static_cast<std::size_t>(contracted.vertex_count()), -1);
    for (auto [a, b] : contracted.m) partner[static_cast<std::size_t>(b)] = a;
    Graph g(m + m / 3);
    for (int i = 0; i + 1 < m; ++i) g.add_edge(i, i + 1);
    g.add_edge(0, m - 1);
    for (int j = 0; j < m / 3; ++j) {
        std::array<Vertex, 3> tri{};
        for (int k = 0; k < 3; ++k) {
            tri[static_cast<std::size_t>(k)] = contracted.p2.vertices[static_cast<std::size_t>(3 * j + k)];
            g.add_edge(m + j, aux_of[static_cast<std::size_t>(partner[static_cast<std::size_t>(tri[static_cast<std::size_t>(k)])])]);
        }
        aux.triples.push_back(tri);
    }
    Cycle c0;
    for (int i = 0; i < m; ++i) c0.vertices.push_back(i);
    aux.cubic = CubicInstance{std::move(g), Edge(0, m - 1), std::move(c0)};
    return aux;
}

struct MatchingResult {
    Path path;
    int matching_edges = 0;
};

// A path in P1 ∪ P2 ∪ M using at least 0.1 |M|^0.8 matching edges. For
// |M| <= 8 a single matching edge suffices. Otherwise the last |M| mod 3
// matching edges (in P1 order) are dropped, the instance is contracted, a
// cycle through e in the auxiliary graph is found, and C - e is expanded back
// by routing each visited w_j through its P2 triple.
inline MatchingResult matching_traverse_path(const MatchingInstance& inst) {
    validate_matching_instance(inst);
    const std::size_t size = inst.m.size();
    MatchingResult res;
    std::vector<std::pair<Vertex, Vertex>> ordered = inst.m;
    std::sort(ordered.begin(), ordered.end(), [&](const auto& x, const auto& y) {
        return detail::index_in(inst.p1, x.first) < detail::index_in(inst.p1, y.first);
    });
    if (size == 0) {
        res.path = Path{{inst.p1.vertices.front()}};
    } else if (size <= 8) {
        res.path = Path{{ordered.front().first, ordered.front().second}};
    } else {
        ordered.resize(size - size % 3);
        MatchingInstance kept{inst.p1, inst.p2, ordered};
        MatchingInstance contracted = contract_instance(kept);
        MatchingAuxiliary aux = matching_auxiliary(contracted);
        const int m = static_cast<int>(ordered.size());
        CubicResult cyc = cubic_cycle_finder(aux.cubic);
        std::vector<Vertex> walk = detail::cycle_minus_edge(cyc.cycle, Edge(0, m - 1));
        if (walk.front() != 0) std::reverse(walk.begin(), walk.end());
        std::vector<Vertex> partner(static_cast<std::size_t>(inst.vertex_count()), -1);
        for (auto [a, b] : ordered) partner[static_cast<std::size_t>(a)] = b;
        std::vector<Vertex> out{aux.u[0]};
        auto extend = [&](const std::vector<Vertex>& piece) { out.insert(out.end(), piece.begin() + 1, piece.end()); };
        for (std::size_t i = 0; i + 1 < walk.size();) {
            Vertex x = walk[i], y = walk[i + 1];
            if (y < m) {
                extend(detail::subpath(inst.p1, aux.u[static_cast<std::size_t>(x)], aux.u[static_cast<std::size_t>(y)]));
                i += 1;
            } else {
                Vertex z = walk[i + 2];
                Vertex hx = aux.u[static_cast<std::size_t>(x)], hz = aux.u[static_cast<std::size_t>(z)];
                std::vector<Vertex> piece{hx};
                std::vector<Vertex> mid = detail::subpath(inst.p2, partner[static_cast<std::size_t>(hx)], partner[static_cast<std::size_t>(hz)]);
                piece.insert(piece.end(), mid.begin(), mid.end());
                piece.push_back(hz);
                extend(piece);
                i += 2;
            }
        }
        res.path = Path{std::move(out)};
    }
    res.matching_edges = count_matching_edges(res.path, inst);
    Graph g = inst.union_graph();
    if (!is_path_in(g, res.path)) throw InternalError("expanded walk is not a path: " + to_string(res.path.vertices));
    check_ge("matching.count", res.matching_edges, 0.1 * std::pow(static_cast<double>(size), 0.8),
             [&] { return "|M|=" + std::to_string(size) + " P=" + to_string(res.path.vertices); });
    return res;
}

// P1 on ids 0..len1-1, P2 on len1..len1+len2-1, m random disjoint pairs.
inline MatchingInstance random_matching_instance(int m, int max_extra, Rng& rng) {
    const int len1 = m + rng.uniform_int(0, max_extra);
    const int len2 = m + rng.uniform_int(0, max_extra);
    MatchingInstance inst;
    for (int i = 0; i < std::max(len1, 1); ++i) inst.p1.vertices.push_back(i);
    for (int i = 0; i < std::max(len2, 1); ++i) inst.p2.vertices.push_back(std::max(len1, 1) + i);
    std::vector<Vertex> a = inst.p1.vertices, b = inst.p2.vertices;
    rng.shuffle(a);
    rng.shuffle(b);
    for (int i = 0; i < m; ++i) inst.m.emplace_back(a[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(i)]);
    return inst;
}

}  // namespace lpt

#endif  // LPT_LEMMAS_MATCHING_HPP
