#ifndef LPT_LINEAR_DECOMPOSITION_HPP
#define LPT_LINEAR_DECOMPOSITION_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lpt/errors.hpp"
#include "lpt/flow.hpp"
#include "lpt/graph.hpp"
#include "lpt/society.hpp"

namespace lpt {

struct LinearDecomposition {
    std::vector<Vertex> omega_order;
    std::vector<VertexSet> bags;
    bool from_search = false;  // produced by the exhaustive fallback

    int length() const { return static_cast<int>(bags.size()); }

    int adhesion() const {
        int best = 0;
        for (std::size_t i = 0; i + 1 < bags.size(); ++i)
            best = std::max(best, static_cast<int>(set_intersection(bags[i], bags[i + 1]).size()));
        return best;
    }

    // Indices of the bags holding v, as a closed range; nullopt if none.
    std::optional<std::pair<int, int>> span_of(Vertex v) const {
        int lo = -1, hi = -1;
        for (int i = 0; i < length(); ++i)
            if (contains(bags[static_cast<std::size_t>(i)], v)) {
                if (lo < 0) lo = i;
                hi = i;
            }
        if (lo < 0) return std::nullopt;
        return std::pair{lo, hi};
    }
};

struct LinearDecompositionReport {
    bool valid = true;
    int adhesion = 0;
    std::vector<std::string> violations;

    void fail(std::string message) {
        valid = false;
        violations.push_back(std::move(message));
    }
};

inline LinearDecompositionReport verify_linear_decomposition(const Society& s, const LinearDecomposition& ld) {
    LinearDecompositionReport rep;
    const int t = s.size();
    if (static_cast<int>(ld.omega_order.size()) != t || ld.length() != t) {
        rep.fail("labeling and bag count must both equal the society size");
        return rep;
    }
    // The labeling must follow the cyclic order, starting anywhere.
    if (t > 0) {
        auto it = std::find(s.omega.begin(), s.omega.end(), ld.omega_order.front());
        if (it == s.omega.end()) {
            rep.fail("labeling uses a vertex outside the society");
            return rep;
        }
        int shift = static_cast<int>(it - s.omega.begin());
        for (int i = 0; i < t; ++i)
            if (ld.omega_order[static_cast<std::size_t>(i)] != s.omega[static_cast<std::size_t>((shift + i) % t)]) {
                rep.fail("labeling does not follow the cyclic order");
                return rep;
            }
    }
    const Graph& g = s.graph;
    for (const auto& bag : ld.bags)
        for (Vertex v : bag)
            if (!g.valid_vertex(v)) {
                rep.fail("bag holds invalid vertex " + std::to_string(v));
                return rep;
            }
    for (int i = 0; i < t; ++i)
        if (!contains(ld.bags[static_cast<std::size_t>(i)], ld.omega_order[static_cast<std::size_t>(i)]))
            rep.fail("v_" + std::to_string(i + 1) + " is not in X_" + std::to_string(i + 1));
    std::vector<std::optional<std::pair<int, int>>> spans(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) {
        spans[static_cast<std::size_t>(v)] = ld.span_of(v);
        const auto& sp = spans[static_cast<std::size_t>(v)];
        if (!sp) {
            rep.fail("vertex " + std::to_string(v) + " is in no bag");
            continue;
        }
        for (int i = sp->first; i <= sp->second; ++i)
            if (!contains(ld.bags[static_cast<std::size_t>(i)], v)) {
                rep.fail("bags holding vertex " + std::to_string(v) + " do not form an interval");
                break;
            }
    }
    for (const Edge& e : g.edges()) {
        bool covered = false;
        for (const auto& bag : ld.bags)
            if (contains(bag, e.u) && contains(bag, e.v)) covered = true;
        if (!covered) rep.fail("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") is in no bag");
    }
    rep.adhesion = ld.adhesion();
    return rep;
}

// Exhaustive search for a linear decomposition of adhesion at most `bound`
// by assigning each vertex an interval of bag indices. Returns nullopt when
// none exists; throws OracleInfeasible once `node_budget` is spent.
inline std::optional<LinearDecomposition> search_linear_decomposition(const Society& s, int bound,
                                                                      long long node_budget = 2'000'000) {
    const Graph& g = s.graph;
    const int t = s.size();
    const int n = g.order();
    std::vector<int> position(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < t; ++i) position[static_cast<std::size_t>(s.omega[static_cast<std::size_t>(i)])] = i;
    // Society vertices first, then the rest in BFS order from them.
    std::vector<Vertex> order(s.omega.begin(), s.omega.end());
    std::vector<char> queued(static_cast<std::size_t>(n), 0);
    for (Vertex v : order) queued[static_cast<std::size_t>(v)] = 1;
    for (std::size_t head = 0; order.size() < static_cast<std::size_t>(n);) {
        if (head == order.size()) {
            for (Vertex v = 0; v < n; ++v)
                if (!queued[static_cast<std::size_t>(v)]) {
                    queued[static_cast<std::size_t>(v)] = 1;
                    order.push_back(v);
                    break;
                }
            continue;
        }
        for (Vertex w : g.neighbors(order[head]))
            if (!queued[static_cast<std::size_t>(w)]) {
                queued[static_cast<std::size_t>(w)] = 1;
                order.push_back(w);
            }
        ++head;
    }
    std::vector<std::pair<int, int>> intervals;
    for (int len = 1; len <= t; ++len)
        for (int lo = 0; lo + len <= t; ++lo) intervals.emplace_back(lo, lo + len - 1);
    std::vector<int> lo(static_cast<std::size_t>(n), -1), hi(static_cast<std::size_t>(n), -1);
    std::vector<int> cross(static_cast<std::size_t>(std::max(t, 1)), 0);
    long long nodes = 0;
    auto place = [&](auto&& self, std::size_t k) -> bool {
        if (k == order.size()) return true;
        if (++nodes > node_budget) throw OracleInfeasible("linear decomposition search exceeded its budget");
        Vertex v = order[k];
        int pos = position[static_cast<std::size_t>(v)];
        for (auto [a, b] : intervals) {
            if (pos >= 0 && (pos < a || pos > b)) continue;
            bool ok = true;
            for (Vertex w : g.neighbors(v)) {
                if (lo[static_cast<std::size_t>(w)] < 0) continue;
                if (b < lo[static_cast<std::size_t>(w)] || hi[static_cast<std::size_t>(w)] < a) {
                    ok = false;
                    break;
                }
            }
            for (int i = a; ok && i < b; ++i)
                if (cross[static_cast<std::size_t>(i)] + 1 > bound) ok = false;
            if (!ok) continue;
            lo[static_cast<std::size_t>(v)] = a;
            hi[static_cast<std::size_t>(v)] = b;
            for (int i = a; i < b; ++i) ++cross[static_cast<std::size_t>(i)];
            if (self(self, k + 1)) return true;
            for (int i = a; i < b; ++i) --cross[static_cast<std::size_t>(i)];
            lo[static_cast<std::size_t>(v)] = hi[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    };
    if (!place(place, 0)) return std::nullopt;
    LinearDecomposition ld;
    ld.omega_order = s.omega;
    ld.bags.assign(static_cast<std::size_t>(t), {});
    for (Vertex v = 0; v < n; ++v)
        for (int i = lo[static_cast<std::size_t>(v)]; i <= hi[static_cast<std::size_t>(v)]; ++i)
            ld.bags[static_cast<std::size_t>(i)].push_back(v);
    ld.from_search = true;
    return ld;
}

// Linear decomposition from the nested leftmost minimum cuts between each
// prefix {v_1..v_i} and the matching suffix of the society order. With
// separations (L_i, R_i) and L_t = R_0 = V, bag X_i = L_i ∩ R_{i-1}.
inline LinearDecomposition build_linear_decomposition(const Society& s) {
    const Graph& g = s.graph;
    const int t = s.size();
    if (t == 0) throw InputError("linear decomposition needs a nonempty society");
    if (!is_connected(g)) throw InputError("linear decomposition needs a connected graph");
    std::vector<VertexSeparation> seps;
    for (int i = 1; i < t; ++i) {
        VertexSet a(s.omega.begin(), s.omega.begin() + i), b(s.omega.begin() + i, s.omega.end());
        seps.push_back(VertexFlow(g, make_vertex_set(a), make_vertex_set(b)).source_side_separation());
    }
    const VertexSet all = g.vertices();
    LinearDecomposition ld;
    ld.omega_order = s.omega;
    for (int i = 1; i <= t; ++i) {
        const VertexSet& left = i == t ? all : seps[static_cast<std::size_t>(i - 1)].left;
        const VertexSet& right = i == 1 ? all : seps[static_cast<std::size_t>(i - 2)].right;
        ld.bags.push_back(set_intersection(left, right));
    }
    if (verify_linear_decomposition(s, ld).valid) return ld;
    if (t <= 8) {
        int cap = t >= 2 ? max_transaction(s).order() : 0;
        for (int bound = cap; bound <= g.order(); ++bound)
            if (auto found = search_linear_decomposition(s, bound)) return *found;
    }
    throw InternalError("linear decomposition construction failed validation");
}

}  // namespace lpt

#endif  // LPT_LINEAR_DECOMPOSITION_HPP
