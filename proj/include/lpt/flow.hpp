#ifndef LPT_FLOW_HPP
#define LPT_FLOW_HPP

#include <deque>
#include <limits>
#include <vector>

#include "lpt/graph.hpp"

namespace lpt {

// Result of a minimum A-B vertex cut, together with the dual packing of
// vertex-disjoint A-B paths (same cardinality by Menger).
struct CutCertificate {
    VertexSet separator;
    VertexSet side_a;
    VertexSet side_b;
    std::vector<Path> paths;
};

// A separation (left, right) with left ∪ right = V, left ∩ right = separator
// and no edge between left \ right and right \ left.
struct VertexSeparation {
    VertexSet left;
    VertexSet right;
    VertexSet separator;
};

// Unit vertex-capacity max flow between vertex sets on the split digraph
// (v_in -> v_out with capacity 1, edges with infinite capacity). A separator
// may contain vertices of A and B. Blocked vertices are treated as deleted.
class VertexFlow {
public:
    struct Options {
        std::vector<char> blocked;        // per vertex; empty means none
        bool terminals_uncuttable = false;  // classical local connectivity
        int limit = std::numeric_limits<int>::max();
    };

    VertexFlow(const Graph& g, const VertexSet& a, const VertexSet& b) : VertexFlow(g, a, b, Options{}) {}

    VertexFlow(const Graph& g, const VertexSet& a, const VertexSet& b, Options opt)
        : n_(g.order()), source_(2 * n_), sink_(2 * n_ + 1), head_(static_cast<std::size_t>(2 * n_ + 2), -1) {
        require_vertices(g, a);
        require_vertices(g, b);
        in_a_.assign(static_cast<std::size_t>(n_), 0);
        in_b_.assign(static_cast<std::size_t>(n_), 0);
        auto blocked = [&](Vertex v) {
            return !opt.blocked.empty() && opt.blocked[static_cast<std::size_t>(v)];
        };
        for (Vertex v : a) in_a_[static_cast<std::size_t>(v)] = 1;
        for (Vertex v : b) in_b_[static_cast<std::size_t>(v)] = 1;
        for (int v = 0; v < n_; ++v) {
            if (blocked(v)) continue;
            bool terminal = in_a_[static_cast<std::size_t>(v)] || in_b_[static_cast<std::size_t>(v)];
            add_arc(in(v), out(v), opt.terminals_uncuttable && terminal ? kInf : 1);
        }
        for (int u = 0; u < n_; ++u) {
            if (blocked(u)) continue;
            for (Vertex w : g.neighbors(u))
                if (!blocked(w)) add_arc(out(u), in(w), kInf);
        }
        for (Vertex v : a)
            if (!blocked(v)) add_arc(source_, in(v), kInf);
        for (Vertex v : b)
            if (!blocked(v)) add_arc(out(v), sink_, kInf);
        run(opt.limit);
    }

    int value() const noexcept { return value_; }

    // Vertex-disjoint A-B paths: first vertex in A, last in B, no interior
    // vertex in A ∪ B.
    std::vector<Path> disjoint_paths() const {
        std::vector<int> remaining(arcs_.size());
        for (std::size_t i = 0; i < arcs_.size(); ++i) remaining[i] = arcs_[i].flow;
        std::vector<Path> paths;
        for (int id = head_[static_cast<std::size_t>(source_)]; id != -1; id = arcs_[static_cast<std::size_t>(id)].next) {
            while (remaining[static_cast<std::size_t>(id)] > 0) {
                --remaining[static_cast<std::size_t>(id)];
                std::vector<Vertex> walk;
                int node = arcs_[static_cast<std::size_t>(id)].to;
                while (node != sink_) {
                    if (node % 2 == 0) walk.push_back(node / 2);
                    int chosen = -1;
                    for (int e = head_[static_cast<std::size_t>(node)]; e != -1; e = arcs_[static_cast<std::size_t>(e)].next)
                        if (remaining[static_cast<std::size_t>(e)] > 0) {
                            chosen = e;
                            break;
                        }
                    if (chosen == -1) throw InternalError("flow decomposition stalled");
                    --remaining[static_cast<std::size_t>(chosen)];
                    node = arcs_[static_cast<std::size_t>(chosen)].to;
                }
                // Trim to an A-B path: start at the last A vertex, stop at the
                // first B vertex after it.
                std::size_t start = 0;
                for (std::size_t i = 0; i < walk.size(); ++i)
                    if (in_a_[static_cast<std::size_t>(walk[i])]) start = i;
                std::size_t stop = walk.size() - 1;
                for (std::size_t i = start; i < walk.size(); ++i)
                    if (in_b_[static_cast<std::size_t>(walk[i])]) {
                        stop = i;
                        break;
                    }
                paths.push_back(Path{std::vector<Vertex>(walk.begin() + static_cast<std::ptrdiff_t>(start),
                                                         walk.begin() + static_cast<std::ptrdiff_t>(stop) + 1)});
            }
        }
        std::sort(paths.begin(), paths.end());
        return paths;
    }

    // The minimum cut closest to A: the source side is exactly the set of
    // nodes reachable from the source in the residual network.
    VertexSeparation source_side_separation() const {
        auto reach = residual_reachable();
        VertexSeparation sep;
        for (int v = 0; v < n_; ++v) {
            bool in_side = reach[static_cast<std::size_t>(in(v))];
            bool out_side = reach[static_cast<std::size_t>(out(v))];
            if (in_side) sep.left.push_back(v);
            if (!out_side) sep.right.push_back(v);
            if (in_side && !out_side) sep.separator.push_back(v);
        }
        return sep;
    }

private:
    static constexpr int kInf = 1 << 29;

    struct Arc {
        int to;
        int cap;
        int flow;
        int next;
    };

    int in(Vertex v) const { return 2 * v; }
    int out(Vertex v) const { return 2 * v + 1; }

    void add_arc(int from, int to, int cap) {
        arcs_.push_back({to, cap, 0, head_[static_cast<std::size_t>(from)]});
        head_[static_cast<std::size_t>(from)] = static_cast<int>(arcs_.size()) - 1;
        arcs_.push_back({from, 0, 0, head_[static_cast<std::size_t>(to)]});
        head_[static_cast<std::size_t>(to)] = static_cast<int>(arcs_.size()) - 1;
    }

    int residual(int id) const {
        const Arc& a = arcs_[static_cast<std::size_t>(id)];
        return a.cap - a.flow;
    }

    void run(int limit) {
        const int nodes = 2 * n_ + 2;
        const int hard_cap = n_ + 1;
        while (value_ < limit && value_ < hard_cap) {
            std::vector<int> via(static_cast<std::size_t>(nodes), -1);
            std::vector<char> seen(static_cast<std::size_t>(nodes), 0);
            std::deque<int> queue{source_};
            seen[static_cast<std::size_t>(source_)] = 1;
            while (!queue.empty() && !seen[static_cast<std::size_t>(sink_)]) {
                int u = queue.front();
                queue.pop_front();
                for (int e = head_[static_cast<std::size_t>(u)]; e != -1; e = arcs_[static_cast<std::size_t>(e)].next) {
                    int w = arcs_[static_cast<std::size_t>(e)].to;
                    if (!seen[static_cast<std::size_t>(w)] && residual(e) > 0) {
                        seen[static_cast<std::size_t>(w)] = 1;
                        via[static_cast<std::size_t>(w)] = e;
                        queue.push_back(w);
                    }
                }
            }
            if (!seen[static_cast<std::size_t>(sink_)]) break;
            for (int node = sink_; node != source_;) {
                int e = via[static_cast<std::size_t>(node)];
                arcs_[static_cast<std::size_t>(e)].flow += 1;
                arcs_[static_cast<std::size_t>(e ^ 1)].flow -= 1;
                node = arcs_[static_cast<std::size_t>(e ^ 1)].to;
            }
            ++value_;
        }
    }

    std::vector<char> residual_reachable() const {
        std::vector<char> seen(static_cast<std::size_t>(2 * n_ + 2), 0);
        std::vector<int> stack{source_};
        seen[static_cast<std::size_t>(source_)] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int e = head_[static_cast<std::size_t>(u)]; e != -1; e = arcs_[static_cast<std::size_t>(e)].next) {
                int w = arcs_[static_cast<std::size_t>(e)].to;
                if (!seen[static_cast<std::size_t>(w)] && residual(e) > 0) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    stack.push_back(w);
                }
            }
        }
        return seen;
    }

    int n_;
    int source_;
    int sink_;
    std::vector<int> head_;
    std::vector<Arc> arcs_;
    std::vector<char> in_a_;
    std::vector<char> in_b_;
    int value_ = 0;
};

// True iff G - S contains no path from A \ S to B \ S.
inline bool separates(const Graph& g, const VertexSet& s, const VertexSet& a, const VertexSet& b) {
    std::vector<char> removed(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v : s) removed[static_cast<std::size_t>(v)] = 1;
    std::vector<char> target(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v : b)
        if (!removed[static_cast<std::size_t>(v)]) target[static_cast<std::size_t>(v)] = 1;
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    std::vector<Vertex> stack;
    for (Vertex v : a)
        if (!removed[static_cast<std::size_t>(v)] && !seen[static_cast<std::size_t>(v)]) {
            seen[static_cast<std::size_t>(v)] = 1;
            stack.push_back(v);
        }
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        if (target[static_cast<std::size_t>(u)]) return false;
        for (Vertex w : g.neighbors(u))
            if (!removed[static_cast<std::size_t>(w)] && !seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                stack.push_back(w);
            }
    }
    return true;
}

// Minimum set separating A from B, plus a maximum packing of disjoint A-B
// paths of the same size. The separator returned is the one closest to A.
inline CutCertificate min_vertex_cut(const Graph& g, const VertexSet& a, const VertexSet& b) {
    VertexSet sa = make_vertex_set(a);
    VertexSet sb = make_vertex_set(b);
    VertexFlow flow(g, sa, sb);
    CutCertificate cert;
    cert.separator = flow.source_side_separation().separator;
    cert.side_a = std::move(sa);
    cert.side_b = std::move(sb);
    cert.paths = flow.disjoint_paths();
    return cert;
}

// Minimum u-v separator avoiding u and v, with a maximum family of
// internally disjoint u-v paths. Needs u, v distinct and nonadjacent.
inline CutCertificate min_internal_vertex_cut(const Graph& g, Vertex u, Vertex v) {
    require_vertex(g, u);
    require_vertex(g, v);
    if (u == v || g.has_edge(u, v)) throw InputError("internal vertex cut needs distinct nonadjacent vertices");
    VertexFlow::Options opt;
    opt.terminals_uncuttable = true;
    VertexFlow flow(g, {u}, {v}, std::move(opt));
    CutCertificate cert;
    cert.separator = flow.source_side_separation().separator;
    cert.side_a = {u};
    cert.side_b = {v};
    cert.paths = flow.disjoint_paths();
    return cert;
}

// Maximum number of internally disjoint u-v paths for nonadjacent u != v,
// stopping early once `limit` is reached.
inline int local_connectivity(const Graph& g, Vertex u, Vertex v,
                              int limit = std::numeric_limits<int>::max()) {
    VertexFlow::Options opt;
    opt.terminals_uncuttable = true;
    opt.limit = limit;
    return VertexFlow(g, {u}, {v}, std::move(opt)).value();
}

}  // namespace lpt

#endif  // LPT_FLOW_HPP
