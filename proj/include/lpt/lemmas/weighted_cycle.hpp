#ifndef LPT_LEMMAS_WEIGHTED_CYCLE_HPP
#define LPT_LEMMAS_WEIGHTED_CYCLE_HPP

#include <bit>
#include <cmath>
#include <functional>
#include <numeric>
#include <vector>

#include "lpt/checks.hpp"
#include "lpt/connectivity.hpp"
#include "lpt/errors.hpp"
#include "lpt/graph.hpp"

namespace lpt {

struct WeightedGraph {
    Graph graph;
    std::vector<int> weight;  // per vertex, nonnegative

    WeightedGraph() = default;
    WeightedGraph(Graph g, std::vector<int> w) : graph(std::move(g)), weight(std::move(w)) {
        if (static_cast<int>(weight.size()) != graph.order()) throw InputError("one weight per vertex is required");
        for (int x : weight)
            if (x < 0) throw InputError("weights must be nonnegative");
    }

    long long total() const { return std::accumulate(weight.begin(), weight.end(), 0LL); }

    long long weight_of(std::span<const Vertex> vs) const {
        long long s = 0;
        for (Vertex v : vs) s += weight[static_cast<std::size_t>(v)];
        return s;
    }
};

inline bool is_cubic(const Graph& g) {
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) != 3) return false;
    return g.order() > 0;
}

// Exact maximum-weight cycle through edges e and f (e == f allowed) by
// exhaustive search with a reachable-weight bound. Among cycles of equal
// weight the first one found (neighbours in increasing order) is kept. The
// result is checked against 0.9 * w(G)^0.8.
inline Cycle max_weight_cycle_through_edges(const WeightedGraph& wg, Edge e, Edge f) {
    const Graph& g = wg.graph;
    if (!is_cubic(g) || !is_k_connected(g, 3)) throw InputError("weighted cycle search needs a 3-connected cubic graph");
    if (!g.has_edge(e.u, e.v) || !g.has_edge(f.u, f.v)) throw InputError("edges must belong to the graph");
    if (g.order() > 64) throw OracleInfeasible("oracle infeasible: more than 64 vertices");
    const auto nbr = neighbor_masks(g);
    const Mask full = g.order() == 64 ? ~Mask{0} : bit(g.order()) - 1;
    auto mask_weight = [&](Mask m) {
        long long s = 0;
        for (; m; m &= m - 1) s += wg.weight[static_cast<std::size_t>(std::countr_zero(m))];
        return s;
    };
    const long long total = wg.total();
    const Vertex start = e.u;
    std::vector<Vertex> seq{e.u, e.v};
    std::vector<Vertex> best_seq;
    long long best = -1;
    const bool need_f = !(f == e);
    std::function<void(Vertex, Mask, long long, bool)> dfs = [&](Vertex cur, Mask visited, long long w, bool has_f) {
        if (best == total) return;
        for (Mask next = nbr[static_cast<std::size_t>(cur)]; next; next &= next - 1) {
            Vertex x = std::countr_zero(next);
            if (x == start) {
                if (seq.size() >= 3 && (has_f || Edge(cur, x) == f) && w > best) {
                    best = w;
                    best_seq = seq;
                }
                continue;
            }
            if (visited & bit(x)) continue;
            bool f_now = has_f || Edge(cur, x) == f;
            Mask nv = visited | bit(x);
            if (need_f && !f_now && (nv & bit(f.u)) && (nv & bit(f.v)) && !(x == f.u || x == f.v)) continue;
            long long nw = w + wg.weight[static_cast<std::size_t>(x)];
            // Optimistic completion: every vertex still reachable from x.
            Mask reach = reachable_within(nbr, x, full & ~(visited & ~bit(start)));
            if (!(reach & bit(start))) continue;
            if (nw + mask_weight(reach & ~nv) <= best) continue;
            seq.push_back(x);
            dfs(x, nv, nw, f_now);
            seq.pop_back();
        }
    };
    dfs(e.v, bit(e.u) | bit(e.v), wg.weight[static_cast<std::size_t>(e.u)] + wg.weight[static_cast<std::size_t>(e.v)], !need_f);
    if (best < 0) throw InternalError("no cycle through the two edges");
    Cycle c{best_seq};
    check_ge("liu.weight", static_cast<double>(best), 0.9 * std::pow(static_cast<double>(total), 0.8), [&] {
        return "n=" + std::to_string(g.order()) + " e=" + std::to_string(e.u) + "-" + std::to_string(e.v) +
               " f=" + std::to_string(f.u) + "-" + std::to_string(f.v) + " C=" + to_string(c.vertices);
    });
    return c;
}

}  // namespace lpt

#endif  // LPT_LEMMAS_WEIGHTED_CYCLE_HPP
