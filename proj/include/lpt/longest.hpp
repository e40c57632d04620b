#ifndef LPT_LONGEST_HPP
#define LPT_LONGEST_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lpt/errors.hpp"
#include "lpt/graph.hpp"

namespace lpt {

enum class Kind { Path, Cycle };

inline const char* to_string(Kind k) { return k == Kind::Path ? "path" : "cycle"; }

struct OracleConfig {
    int cap = 24;                        // refuse graphs with more vertices
    std::size_t member_cap = 4'000'000;  // refuse families larger than this
};

// All longest paths (or cycles) of a graph in canonical form and sorted order.
// For paths `length` is ℓ (edges); for cycles it is ℓ' (= vertices), and 0 for
// acyclic graphs, whose family is empty.
struct LongestFamily {
    Kind kind = Kind::Path;
    int length = 0;
    std::vector<std::vector<Vertex>> members;
    std::vector<Mask> masks;

    std::size_t size() const noexcept { return members.size(); }
    Path path(std::size_t i) const { return Path{members[i]}; }
    Cycle cycle(std::size_t i) const { return Cycle{members[i]}; }
};

struct HittingSet {
    VertexSet vertices;
    bool optimal = false;
};

namespace detail {

// Depth-first enumeration of simple paths over bitmask adjacency. `visit`
// returns true to stop the whole search.
class PathWalker {
public:
    PathWalker(const std::vector<Mask>& nbr, Mask allowed) : nbr_(nbr), allowed_(allowed) {}

    // Upper bound on how many more vertices a path ending at `end` can add.
    int extension_bound(Vertex end, Mask visited) const {
        return std::popcount(reachable_within(nbr_, end, allowed_ & ~visited)) - 1;
    }

    const std::vector<Mask>& nbr() const { return nbr_; }
    Mask allowed() const { return allowed_; }

private:
    const std::vector<Mask>& nbr_;
    Mask allowed_;
};

inline Mask all_vertices_mask(int n) { return n >= 64 ? ~Mask{0} : (bit(n) - 1); }

inline void require_cap(const Graph& g, const OracleConfig& cfg) {
    if (g.order() > cfg.cap)
        throw OracleInfeasible("oracle infeasible: n = " + std::to_string(g.order()) + " exceeds cap " +
                               std::to_string(cfg.cap));
    if (g.order() > 64) throw OracleInfeasible("oracle infeasible: more than 64 vertices");
}

// Longest path (in edges) inside `allowed`; -1 when allowed is empty.
inline int longest_path_length(const std::vector<Mask>& nbr, Mask allowed) {
    if (!allowed) return -1;
    int best = 0;
    int target = 0;
    for (Mask rest = allowed; rest;) {
        Vertex v = std::countr_zero(rest);
        Mask comp = reachable_within(nbr, v, allowed);
        target = std::max(target, std::popcount(comp) - 1);
        rest &= ~comp;
    }
    PathWalker walker(nbr, allowed);
    std::vector<Vertex> stack;
    std::function<void(Vertex, Mask, int)> dfs = [&](Vertex v, Mask visited, int len) {
        if (len > best) best = len;
        if (best == target) return;
        if (len + walker.extension_bound(v, visited & ~bit(v)) <= best) return;
        for (Mask next = nbr[static_cast<std::size_t>(v)] & allowed & ~visited; next && best < target; next &= next - 1) {
            Vertex w = std::countr_zero(next);
            dfs(w, visited | bit(w), len + 1);
        }
    };
    for (Mask rest = allowed; rest && best < target; rest &= rest - 1) {
        Vertex s = std::countr_zero(rest);
        dfs(s, bit(s), 0);
    }
    return best;
}

// Longest cycle (in vertices) inside `allowed`; 0 when acyclic.
inline int longest_cycle_length(const std::vector<Mask>& nbr, Mask allowed) {
    int best = 0;
    const int target = std::popcount(allowed);
    std::function<void(Vertex, Vertex, Mask, Mask, int)> dfs = [&](Vertex s, Vertex v, Mask visited, Mask region, int count) {
        if (count >= 3 && (nbr[static_cast<std::size_t>(v)] & bit(s)) && count > best) best = count;
        if (best == target) return;
        int bound = std::popcount(reachable_within(nbr, v, region & ~visited)) - 1;
        if (count + bound <= best) return;
        for (Mask next = nbr[static_cast<std::size_t>(v)] & region & ~visited; next && best < target; next &= next - 1) {
            Vertex w = std::countr_zero(next);
            dfs(s, w, visited | bit(w), region, count + 1);
        }
    };
    for (Mask rest = allowed; rest && best < target; rest &= rest - 1) {
        Vertex s = std::countr_zero(rest);
        Mask region = allowed & ~(bit(s) - 1);  // vertices >= s
        dfs(s, s, bit(s), region, 1);
    }
    return best;
}

// Calls visit(seq) for every path with exactly `len` edges inside `allowed`,
// once per path (smaller endpoint first). visit returns true to stop.
template <class Visit>
bool for_each_path_of_length(const std::vector<Mask>& nbr, Mask allowed, int len, Visit&& visit) {
    PathWalker walker(nbr, allowed);
    std::vector<Vertex> seq;
    bool stop = false;
    std::function<void(Vertex, Mask)> dfs = [&](Vertex v, Mask visited) {
        int cur = static_cast<int>(seq.size()) - 1;
        if (cur == len) {
            if (len == 0 || seq.front() < seq.back()) stop = visit(seq);
            return;
        }
        if (cur + walker.extension_bound(v, visited & ~bit(v)) < len) return;
        for (Mask next = nbr[static_cast<std::size_t>(v)] & allowed & ~visited; next && !stop; next &= next - 1) {
            Vertex w = std::countr_zero(next);
            seq.push_back(w);
            dfs(w, visited | bit(w));
            seq.pop_back();
        }
    };
    for (Mask rest = allowed; rest && !stop; rest &= rest - 1) {
        Vertex s = std::countr_zero(rest);
        seq.assign(1, s);
        dfs(s, bit(s));
    }
    return stop;
}

// Calls visit(seq) for every cycle with exactly `len` vertices inside
// `allowed`, in canonical orientation. visit returns true to stop.
template <class Visit>
bool for_each_cycle_of_length(const std::vector<Mask>& nbr, Mask allowed, int len, Visit&& visit) {
    if (len < 3) return false;
    std::vector<Vertex> seq;
    bool stop = false;
    std::function<void(Vertex, Mask, Mask)> dfs = [&](Vertex v, Mask visited, Mask region) {
        const int count = static_cast<int>(seq.size());
        const Vertex s = seq.front();
        if (count == len) {
            if ((nbr[static_cast<std::size_t>(v)] & bit(s)) && seq[1] < seq.back()) stop = visit(seq);
            return;
        }
        int bound = std::popcount(reachable_within(nbr, v, region & ~visited)) - 1;
        if (count + bound < len) return;
        for (Mask next = nbr[static_cast<std::size_t>(v)] & region & ~visited; next && !stop; next &= next - 1) {
            Vertex w = std::countr_zero(next);
            seq.push_back(w);
            dfs(w, visited | bit(w), region);
            seq.pop_back();
        }
    };
    for (Mask rest = allowed; rest && !stop; rest &= rest - 1) {
        Vertex s = std::countr_zero(rest);
        Mask region = allowed & ~(bit(s) - 1);
        if (std::popcount(region) < len) break;
        seq.assign(1, s);
        dfs(s, bit(s), region);
    }
    return stop;
}

}  // namespace detail

// Maximum number of edges of a path in g (0 for a single vertex).
inline int longest_path_length(const Graph& g) {
    if (g.order() == 0) return -1;
    auto nbr = neighbor_masks(g);
    return detail::longest_path_length(nbr, detail::all_vertices_mask(g.order()));
}

// Maximum length of a cycle in g; 0 for forests.
inline int longest_cycle_length(const Graph& g) {
    auto nbr = neighbor_masks(g);
    return detail::longest_cycle_length(nbr, detail::all_vertices_mask(g.order()));
}

inline int longest_length(const Graph& g, Kind kind) {
    return kind == Kind::Path ? longest_path_length(g) : longest_cycle_length(g);
}

inline LongestFamily enumerate_longest(const Graph& g, Kind kind, const OracleConfig& cfg = {}) {
    detail::require_cap(g, cfg);
    if (g.order() == 0) throw InputError("enumerate_longest needs a nonempty graph");
    if (kind == Kind::Path && !is_connected(g)) throw InputError("longest-path oracle needs a connected graph");
    auto nbr = neighbor_masks(g);
    const Mask all = detail::all_vertices_mask(g.order());
    LongestFamily fam;
    fam.kind = kind;
    auto collect = [&](const std::vector<Vertex>& seq) {
        if (fam.members.size() >= cfg.member_cap)
            throw OracleInfeasible("oracle infeasible: more than " + std::to_string(cfg.member_cap) + " longest members");
        fam.members.push_back(seq);
        return false;
    };
    if (kind == Kind::Path) {
        fam.length = detail::longest_path_length(nbr, all);
        detail::for_each_path_of_length(nbr, all, fam.length, collect);
    } else {
        fam.length = detail::longest_cycle_length(nbr, all);
        detail::for_each_cycle_of_length(nbr, all, fam.length, collect);
    }
    std::sort(fam.members.begin(), fam.members.end());
    fam.masks.reserve(fam.members.size());
    for (const auto& m : fam.members) fam.masks.push_back(mask_of(m));
    return fam;
}

// All cycles of exactly `len` vertices, canonical and sorted.
inline std::vector<Cycle> cycles_of_length(const Graph& g, int len) {
    auto nbr = neighbor_masks(g);
    std::vector<Cycle> out;
    detail::for_each_cycle_of_length(nbr, detail::all_vertices_mask(g.order()), len, [&](const std::vector<Vertex>& seq) {
        out.push_back(Cycle{seq});
        return false;
    });
    std::sort(out.begin(), out.end());
    return out;
}

inline bool is_transversal(const VertexSet& s, const LongestFamily& fam) {
    if (fam.members.empty()) return true;
    Mask sm = 0;
    for (Vertex v : s)
        if (v >= 0 && v < 64) sm |= bit(v);
    for (Mask m : fam.masks)
        if (!(m & sm)) return false;
    return true;
}

// Minimum hitting set of the family by iterative-deepening branch and bound.
// Branches on the first unhit member; its vertices are tried in order of
// decreasing coverage count, ties by id.
inline HittingSet minimum_hitting_set(const LongestFamily& fam) {
    HittingSet result;
    result.optimal = true;
    if (fam.members.empty()) return result;
    std::map<Vertex, std::size_t> coverage;
    for (const auto& m : fam.members)
        for (Vertex v : m) ++coverage[v];
    auto order_vertices = [&](const std::vector<Vertex>& member) {
        std::vector<Vertex> vs = member;
        std::sort(vs.begin(), vs.end(), [&](Vertex a, Vertex b) {
            if (coverage[a] != coverage[b]) return coverage[a] > coverage[b];
            return a < b;
        });
        return vs;
    };
    std::vector<std::vector<Vertex>> branch_order;
    branch_order.reserve(fam.members.size());
    for (const auto& m : fam.members) branch_order.push_back(order_vertices(m));

    std::vector<Vertex> chosen;
    std::set<Mask> dead;  // (partial set) states already refuted at this depth budget
    std::function<bool(Mask, int, std::size_t)> search = [&](Mask hit, int budget, std::size_t from) {
        std::size_t i = from;
        while (i < fam.masks.size() && (fam.masks[i] & hit)) ++i;
        if (i == fam.masks.size()) return true;
        if (budget == 0) return false;
        for (Vertex v : branch_order[i]) {
            Mask next = hit | bit(v);
            if (dead.count(next)) continue;
            chosen.push_back(v);
            if (search(next, budget - 1, i + 1)) return true;
            chosen.pop_back();
            dead.insert(next);
        }
        return false;
    };
    for (int k = 1;; ++k) {
        dead.clear();
        chosen.clear();
        if (search(0, k, 0)) break;
    }
    result.vertices = make_vertex_set(chosen);
    return result;
}

inline HittingSet exact_transversal_number(const Graph& g, Kind kind, const OracleConfig& cfg = {}) {
    return minimum_hitting_set(enumerate_longest(g, kind, cfg));
}

// A path with exactly `len` edges avoiding `blocked`, if one exists.
inline std::optional<Path> find_path_of_length(const Graph& g, int len, const VertexSet& blocked = {}) {
    auto nbr = neighbor_masks(g);
    Mask allowed = detail::all_vertices_mask(g.order()) & ~mask_of(blocked);
    std::optional<Path> found;
    detail::for_each_path_of_length(nbr, allowed, len, [&](const std::vector<Vertex>& seq) {
        found = Path{seq};
        return true;
    });
    return found;
}

inline std::optional<Cycle> find_cycle_of_length(const Graph& g, int len, const VertexSet& blocked = {}) {
    auto nbr = neighbor_masks(g);
    Mask allowed = detail::all_vertices_mask(g.order()) & ~mask_of(blocked);
    std::optional<Cycle> found;
    detail::for_each_cycle_of_length(nbr, allowed, len, [&](const std::vector<Vertex>& seq) {
        found = Cycle{seq};
        return true;
    });
    return found;
}

// lpt/lct without materializing the family: the smallest S such that G - S
// has no longest member, found by branching on the vertices of a surviving
// member. Works up to 64 vertices whenever single searches stay cheap.
inline HittingSet exact_transversal_number_implicit(const Graph& g, Kind kind) {
    if (g.order() > 64) throw OracleInfeasible("oracle infeasible: more than 64 vertices");
    if (kind == Kind::Path && !is_connected(g)) throw InputError("longest-path oracle needs a connected graph");
    const int target = longest_length(g, kind);
    HittingSet result;
    result.optimal = true;
    if (kind == Kind::Cycle && target == 0) return result;
    auto survivor = [&](const VertexSet& s) -> std::optional<std::vector<Vertex>> {
        if (kind == Kind::Path) {
            if (auto p = find_path_of_length(g, target, s)) return p->vertices;
        } else if (auto c = find_cycle_of_length(g, target, s)) {
            return c->vertices;
        }
        return std::nullopt;
    };
    std::set<VertexSet> dead;
    std::function<std::optional<VertexSet>(const VertexSet&, int)> search = [&](const VertexSet& s, int budget) -> std::optional<VertexSet> {
        auto member = survivor(s);
        if (!member) return s;
        if (budget == 0) return std::nullopt;
        VertexSet candidates = make_vertex_set(*member);
        for (Vertex v : candidates) {
            VertexSet next = s;
            next.insert(std::upper_bound(next.begin(), next.end(), v), v);
            if (dead.count(next)) continue;
            if (auto found = search(next, budget - 1)) return found;
            dead.insert(next);
        }
        return std::nullopt;
    };
    for (int k = 0;; ++k) {
        dead.clear();
        if (auto found = search({}, k)) {
            result.vertices = *found;
            return result;
        }
    }
}

// No longer path shares p's endpoints.
inline bool is_locally_longest(const Path& p, const Graph& g) {
    if (!is_path_in(g, p)) throw InputError("is_locally_longest: not a path of the graph");
    if (p.vertices.size() == 1) return true;
    auto nbr = neighbor_masks(g);
    const Mask all = detail::all_vertices_mask(g.order());
    const Vertex u = p.front();
    const Vertex target = p.back();
    const int len = p.length();
    bool found = false;
    std::function<void(Vertex, Mask, int)> dfs = [&](Vertex v, Mask visited, int depth) {
        if (v == target) {
            if (depth > len) found = true;
            return;
        }
        Mask reach = reachable_within(nbr, v, all & ~visited);
        if (!(reach & bit(target))) return;
        if (depth + std::popcount(reach) - 1 <= len) return;
        for (Mask next = nbr[static_cast<std::size_t>(v)] & all & ~visited; next && !found; next &= next - 1) {
            Vertex w = std::countr_zero(next);
            dfs(w, visited | bit(w), depth + 1);
        }
    };
    dfs(u, bit(u), 0);
    return !found;
}

// dist_C(x, y) = dist_G(x, y) for all x, y on the cycle.
inline bool is_geodetic(const Cycle& c, const Graph& g) {
    if (!is_cycle_in(g, c)) throw InputError("is_geodetic: not a cycle of the graph");
    const int len = c.length();
    for (int i = 0; i < len; ++i) {
        auto dist = bfs_distances(g, c.vertices[static_cast<std::size_t>(i)]);
        for (int j = i + 1; j < len; ++j)
            if (dist[static_cast<std::size_t>(c.vertices[static_cast<std::size_t>(j)])] != cyclic_distance(i, j, len))
                return false;
    }
    return true;
}

// Some path with exactly `len` edges passes through v.
inline bool exists_path_of_length_through(const Graph& g, Vertex v, int len) {
    auto nbr = neighbor_masks(g);
    const Mask all = detail::all_vertices_mask(g.order());
    detail::PathWalker walker(nbr, all);
    bool found = false;
    std::function<void(Vertex, Mask, int)> dfs = [&](Vertex cur, Mask visited, int depth) {
        if (depth == len) {
            found = (visited & bit(v)) != 0;
            return;
        }
        Mask reach = reachable_within(nbr, cur, all & ~(visited & ~bit(cur)));
        if (!(visited & bit(v)) && !(reach & bit(v))) return;
        if (depth + std::popcount(reach) - 1 < len) return;
        for (Mask next = nbr[static_cast<std::size_t>(cur)] & ~visited; next && !found; next &= next - 1) {
            Vertex w = std::countr_zero(next);
            dfs(w, visited | bit(w), depth + 1);
        }
    };
    for (int s = 0; s < g.order() && !found; ++s) dfs(s, bit(s), 0);
    return found;
}

}  // namespace lpt

#endif  // LPT_LONGEST_HPP
