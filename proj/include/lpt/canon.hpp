#ifndef LPT_CANON_HPP
#define LPT_CANON_HPP

#include <algorithm>
#include <map>
#include <vector>

#include "lpt/errors.hpp"
#include "lpt/graph.hpp"

namespace lpt {

// Canonical form by colour refinement plus individualization of the first
// non-singleton cell, pruning children that lie in one orbit of the
// automorphisms found so far. Two graphs are isomorphic iff their forms are
// equal. Rows are neighbor masks under the canonical labeling.
struct CanonicalForm {
    int n = 0;
    std::vector<Mask> rows;
    std::vector<Vertex> labeling;  // labeling[v] = canonical position of v

    friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) { return a.n == b.n && a.rows == b.rows; }
    friend bool operator<(const CanonicalForm& a, const CanonicalForm& b) {
        return a.n != b.n ? a.n < b.n : a.rows < b.rows;
    }
};

namespace detail {

using Partition = std::vector<std::vector<Vertex>>;

// Splits cells by neighbor counts into every cell until stable. Cell order is
// a function of the structure only, so the result is isomorphism-invariant.
inline Partition refine(const Graph& g, Partition cells) {
    const int n = g.order();
    std::vector<int> cell_of(static_cast<std::size_t>(n));
    while (true) {
        for (std::size_t c = 0; c < cells.size(); ++c)
            for (Vertex v : cells[c]) cell_of[static_cast<std::size_t>(v)] = static_cast<int>(c);
        Partition next;
        for (const auto& cell : cells) {
            std::map<std::vector<int>, std::vector<Vertex>> groups;
            for (Vertex v : cell) {
                std::vector<int> key(cells.size(), 0);
                for (Vertex w : g.neighbors(v)) ++key[static_cast<std::size_t>(cell_of[static_cast<std::size_t>(w)])];
                groups[key].push_back(v);
            }
            for (auto& [key, members] : groups) next.push_back(std::move(members));
        }
        if (next.size() == cells.size()) return next;
        cells = std::move(next);
    }
}

inline std::vector<Mask> relabeled_rows(const Graph& g, const std::vector<Vertex>& order) {
    const int n = g.order();
    std::vector<Vertex> pos(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
    std::vector<Mask> rows(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for (Vertex w : g.neighbors(order[static_cast<std::size_t>(i)])) rows[static_cast<std::size_t>(i)] |= bit(pos[static_cast<std::size_t>(w)]);
    return rows;
}

struct CanonSearch {
    const Graph& g;
    CanonicalForm best;
    bool have = false;
    std::vector<Vertex> first_order, best_order;
    std::vector<Mask> first_rows;
    std::vector<std::vector<Vertex>> automorphisms;  // as vertex maps

    void record(const std::vector<Vertex>& from, const std::vector<Vertex>& to) {
        std::vector<Vertex> gamma(from.size());
        for (std::size_t i = 0; i < from.size(); ++i) gamma[static_cast<std::size_t>(from[i])] = to[i];
        automorphisms.push_back(std::move(gamma));
    }

    void leaf(const std::vector<Vertex>& order) {
        auto rows = relabeled_rows(g, order);
        if (!have) {
            first_order = best_order = order;
            first_rows = rows;
        } else if (rows == first_rows) {
            record(first_order, order);
        } else if (rows == best.rows) {
            record(best_order, order);
        }
        if (!have || rows > best.rows) {
            best.rows = std::move(rows);
            best_order = order;
            best.labeling.assign(order.size(), 0);
            for (std::size_t i = 0; i < order.size(); ++i) best.labeling[static_cast<std::size_t>(order[i])] = static_cast<Vertex>(i);
            have = true;
        }
    }

    // Orbit representatives under the known automorphisms fixing `prefix`.
    std::vector<Vertex> orbit_root(const std::vector<Vertex>& prefix) const {
        const int n = g.order();
        std::vector<Vertex> parent(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) parent[static_cast<std::size_t>(v)] = v;
        auto find = [&](Vertex v) {
            while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
            return v;
        };
        for (const auto& gamma : automorphisms) {
            bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](Vertex v) { return gamma[static_cast<std::size_t>(v)] == v; });
            if (!fixes) continue;
            for (int v = 0; v < n; ++v) {
                Vertex a = find(v), b = find(gamma[static_cast<std::size_t>(v)]);
                if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
            }
        }
        for (int v = 0; v < n; ++v) parent[static_cast<std::size_t>(v)] = find(v);
        return parent;
    }

    void run(const Partition& cells, std::vector<Vertex>& prefix) {
        Partition p = refine(g, cells);
        auto target = std::find_if(p.begin(), p.end(), [](const auto& c) { return c.size() > 1; });
        if (target == p.end()) {
            std::vector<Vertex> order;
            for (const auto& c : p) order.push_back(c.front());
            leaf(order);
            return;
        }
        const std::size_t at = static_cast<std::size_t>(target - p.begin());
        std::vector<Vertex> tried;
        for (Vertex v : p[at]) {
            if (!tried.empty()) {
                auto root = orbit_root(prefix);
                bool seen = std::any_of(tried.begin(), tried.end(), [&](Vertex u) {
                    return root[static_cast<std::size_t>(u)] == root[static_cast<std::size_t>(v)];
                });
                if (seen) continue;
            }
            tried.push_back(v);
            Partition q;
            for (std::size_t c = 0; c < p.size(); ++c) {
                if (c != at) {
                    q.push_back(p[c]);
                    continue;
                }
                q.push_back({v});
                std::vector<Vertex> rest;
                for (Vertex w : p[c])
                    if (w != v) rest.push_back(w);
                q.push_back(std::move(rest));
            }
            prefix.push_back(v);
            run(q, prefix);
            prefix.pop_back();
        }
    }
};

inline CanonicalForm canonical_form_from(const Graph& g, Partition start) {
    if (g.order() > 64) throw InputError("canonical form supports at most 64 vertices");
    CanonSearch search{g, {}, false, {}, {}, {}, {}};
    search.best.n = g.order();
    if (g.order() == 0) return search.best;
    std::vector<Vertex> prefix;
    search.run(start, prefix);
    return search.best;
}

}  // namespace detail

inline CanonicalForm canonical_form(const Graph& g) {
    detail::Partition start;
    if (g.order() > 0) start.push_back(g.vertices());
    return detail::canonical_form_from(g, std::move(start));
}

// Canonical form of g with v singled out; equal forms for u and v mean some
// automorphism maps u to v.
inline CanonicalForm rooted_canonical_form(const Graph& g, Vertex v) {
    require_vertex(g, v);
    detail::Partition start{{v}};
    std::vector<Vertex> rest;
    for (Vertex w = 0; w < g.order(); ++w)
        if (w != v) rest.push_back(w);
    if (!rest.empty()) start.push_back(std::move(rest));
    return detail::canonical_form_from(g, std::move(start));
}

inline Graph graph_from_rows(int n, const std::vector<Mask>& rows) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rows[static_cast<std::size_t>(u)] & bit(v)) g.add_edge(u, v);
    return g;
}

inline Graph canonical_graph(const Graph& g) { return graph_from_rows(g.order(), canonical_form(g).rows); }

inline bool isomorphic(const Graph& a, const Graph& b) {
    return a.order() == b.order() && a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

// Automorphism orbits of the vertex set, by rooted canonical forms.
inline std::vector<int> vertex_orbits(const Graph& g) {
    std::vector<CanonicalForm> forms;
    std::vector<int> orbit(static_cast<std::size_t>(g.order()), -1);
    for (Vertex v = 0; v < g.order(); ++v) {
        CanonicalForm f = rooted_canonical_form(g, v);
        auto it = std::find(forms.begin(), forms.end(), f);
        orbit[static_cast<std::size_t>(v)] = static_cast<int>(it - forms.begin());
        if (it == forms.end()) forms.push_back(std::move(f));
    }
    return orbit;
}

inline bool is_vertex_transitive(const Graph& g) {
    auto orbit = vertex_orbits(g);
    return std::all_of(orbit.begin(), orbit.end(), [](int o) { return o == 0; });
}

}  // namespace lpt

#endif  // LPT_CANON_HPP
