#ifndef LPT_ENUMERATE_GRAPHS_HPP
#define LPT_ENUMERATE_GRAPHS_HPP

#include <set>
#include <vector>

#include "lpt/canon.hpp"
#include "lpt/connectivity.hpp"
#include "lpt/errors.hpp"

namespace lpt {

// Number of unlabeled graphs and connected graphs on n vertices, n <= 10.
inline constexpr long long kGraphCounts[] = {1, 1, 2, 4, 11, 34, 156, 1044, 12346, 274668, 12005168};
inline constexpr long long kConnectedGraphCounts[] = {1, 1, 1, 2, 6, 21, 112, 853, 11117, 261080, 11716571};
// 2-connected (n >= 3), from n = 0.
inline constexpr long long kTwoConnectedGraphCounts[] = {0, 0, 0, 1, 3, 10, 56, 468, 7123, 194066};

// One representative (in canonical labeling) per isomorphism class of graphs
// on exactly n vertices, sorted by canonical form. Each class of order n is
// reached by adding a vertex to a class of order n - 1.
inline std::vector<Graph> all_graphs(int n) {
    if (n < 0 || n > 9) throw InputError("exhaustive enumeration supports 0..9 vertices");
    std::set<CanonicalForm> level{canonical_form(Graph(0))};
    for (int k = 1; k <= n; ++k) {
        std::set<CanonicalForm> next;
        for (const auto& f : level) {
            Graph base = graph_from_rows(k - 1, f.rows);
            for (Mask nb = 0; nb < bit(k - 1); ++nb) {
                Graph g(k);
                for (const Edge& e : base.edges()) g.add_edge(e.u, e.v);
                for (Vertex v = 0; v < k - 1; ++v)
                    if (nb & bit(v)) g.add_edge(v, k - 1);
                next.insert(canonical_form(g));
            }
        }
        level = std::move(next);
    }
    std::vector<Graph> out;
    for (const auto& f : level) out.push_back(graph_from_rows(n, f.rows));
    return out;
}

inline std::vector<Graph> connected_graphs(int n) {
    std::vector<Graph> out;
    for (Graph& g : all_graphs(n))
        if (n > 0 && is_connected(g)) out.push_back(std::move(g));
    return out;
}

inline std::vector<Graph> two_connected_graphs(int n) {
    std::vector<Graph> out;
    if (n < 3) return out;
    for (Graph& g : all_graphs(n))
        if (is_two_connected(g)) out.push_back(std::move(g));
    return out;
}

}  // namespace lpt

#endif  // LPT_ENUMERATE_GRAPHS_HPP
