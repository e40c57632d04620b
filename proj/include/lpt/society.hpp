#ifndef LPT_SOCIETY_HPP
#define LPT_SOCIETY_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "lpt/flow.hpp"
#include "lpt/graph.hpp"

namespace lpt {

// A graph together with a cyclic order on some of its vertices.
struct Society {
    Graph graph;
    std::vector<Vertex> omega;

    Society() = default;
    Society(Graph g, std::vector<Vertex> cyclic_order) : graph(std::move(g)), omega(std::move(cyclic_order)) {
        require_vertices(graph, omega);
        if (!all_distinct(omega)) throw InputError("society order repeats a vertex");
    }

    int size() const { return static_cast<int>(omega.size()); }
    VertexSet omega_set() const { return make_vertex_set(omega); }
};

// Cyclic run of consecutive positions of the society order.
struct Segment {
    int start = 0;
    int length = 0;

    std::vector<int> positions(int t) const {
        std::vector<int> out;
        for (int i = 0; i < length; ++i) out.push_back((start + i) % t);
        return out;
    }
    VertexSet vertices(const Society& s) const {
        VertexSet out;
        for (int i : positions(s.size())) out.push_back(s.omega[static_cast<std::size_t>(i)]);
        return make_vertex_set(std::move(out));
    }
    bool operator==(const Segment&) const = default;
};

struct Transaction {
    std::vector<Path> paths;
    Segment segment_a;
    Segment segment_b;

    int order() const { return static_cast<int>(paths.size()); }
};

// Checks that the paths are pairwise disjoint Omega-paths from A to B over
// disjoint proper segments. Returns an empty string when valid.
inline std::string transaction_violation(const Society& s, const Transaction& tx) {
    const int t = s.size();
    for (const Segment* seg : {&tx.segment_a, &tx.segment_b})
        if (seg->start < 0 || seg->start >= t || seg->length < 1 || seg->length >= t) return "segment out of range";
    VertexSet a = tx.segment_a.vertices(s), b = tx.segment_b.vertices(s);
    if (intersects(a, b)) return "segments overlap";
    VertexSet om = s.omega_set();
    VertexSet used;
    for (const Path& p : tx.paths) {
        if (p.vertices.size() < 2 || !is_path_in(s.graph, p)) return "not a path of the graph";
        Vertex x = p.front(), y = p.back();
        if (!((contains(a, x) && contains(b, y)) || (contains(a, y) && contains(b, x)))) return "path does not join A to B";
        for (std::size_t i = 1; i + 1 < p.vertices.size(); ++i)
            if (contains(om, p.vertices[i])) return "path has an interior society vertex";
        VertexSet vs = p.vertex_set();
        if (intersects(used, vs)) return "paths are not disjoint";
        used = set_union(used, vs);
    }
    return {};
}

inline bool verify_transaction(const Society& s, const Transaction& tx) { return transaction_violation(s, tx).empty(); }

// Maximum number of disjoint A-B Omega-paths for fixed segments; other
// society vertices may not be used.
inline VertexFlow segment_flow(const Society& s, const Segment& sa, const Segment& sb) {
    VertexSet a = sa.vertices(s), b = sb.vertices(s);
    VertexFlow::Options opt;
    opt.blocked.assign(static_cast<std::size_t>(s.graph.order()), 0);
    for (Vertex v : s.omega)
        if (!contains(a, v) && !contains(b, v)) opt.blocked[static_cast<std::size_t>(v)] = 1;
    return VertexFlow(s.graph, a, b, std::move(opt));
}

// Transaction of maximum order over all ordered pairs of disjoint proper
// segments. The first maximum in (startA, lenA, startB, lenB) order wins.
inline Transaction max_transaction(const Society& s) {
    const int t = s.size();
    if (t < 2) throw InputError("max_transaction needs at least two society vertices");
    int best = -1;
    Segment best_a, best_b;
    const int ceiling = t / 2;
    for (int sa = 0; sa < t && best < ceiling; ++sa)
        for (int la = 1; la < t && best < ceiling; ++la)
            for (int sb = 0; sb < t && best < ceiling; ++sb) {
                // B must start outside A; its length is bounded by the gap to A.
                int off = ((sb - sa) % t + t) % t;
                if (off < la) continue;
                for (int lb = 1; off + lb <= t && best < ceiling; ++lb) {
                    if (std::min(la, lb) <= best) continue;
                    Segment a{sa, la}, b{sb, lb};
                    int value = segment_flow(s, a, b).value();
                    if (value > best) {
                        best = value;
                        best_a = a;
                        best_b = b;
                    }
                }
            }
    Transaction tx;
    tx.segment_a = best_a;
    tx.segment_b = best_b;
    tx.paths = segment_flow(s, best_a, best_b).disjoint_paths();
    return tx;
}

}  // namespace lpt

#endif  // LPT_SOCIETY_HPP
