#ifndef LPT_TRANSVERSAL_HPP
#define LPT_TRANSVERSAL_HPP

#include <cmath>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lpt/checks.hpp"
#include "lpt/connectivity.hpp"
#include "lpt/errors.hpp"
#include "lpt/lemmas/nice_hitting.hpp"
#include "lpt/lemmas/separate.hpp"
#include "lpt/linear_decomposition.hpp"
#include "lpt/longest.hpp"
#include "lpt/society.hpp"

namespace lpt {

enum class Branch { SingleVertex, DirectCycle, Case1Split, Case2Society };

inline const char* to_string(Branch b) {
    switch (b) {
        case Branch::SingleVertex: return "single-vertex";
        case Branch::DirectCycle: return "direct-cycle";
        case Branch::Case1Split: return "case1-split";
        case Branch::Case2Society: return "case2-society";
    }
    return "?";
}

struct EngineOptions {
    // Run the geodetic split even when the hitting cycle is already within
    // the bound; used to exercise both cases on small graphs.
    bool force_construction = false;
    OracleConfig oracle{};
};

// Bound of the theorem: min{sqrt(8n), 33 l^(5/9)} for paths, sqrt(8n) for
// cycles.
inline double transversal_bound(int n, int ell, Kind kind) {
    const double root = std::sqrt(8.0 * n);
    if (kind == Kind::Cycle) return root;
    return std::min(root, 33.0 * std::pow(static_cast<double>(ell), 5.0 / 9.0));
}

struct Case1Witness {
    Vertex x = -1;
    Vertex y = -1;
    Path shortcut;  // x-y path internally disjoint from C, shorter than dist_C(x, y)
    Cycle c1;
    Cycle c2;
    std::vector<Vertex> l1;  // longest member avoiding c1
    std::vector<Vertex> l2;
    VertexSet k1;
    VertexSet k2;
};

struct Case2Witness {
    Society society;
    Transaction transaction;
    LinearDecomposition decomposition;
    std::vector<std::pair<int, int>> intervals;  // I_L per longest member
    int index = 0;                               // chosen bag, 0-based
    int p = 0;
};

struct TransversalCertificate {
    Kind kind = Kind::Path;
    int n = 0;
    int ell = 0;
    VertexSet s;
    Branch branch = Branch::SingleVertex;
    double bound_used = 0.0;
    std::optional<Cycle> hitting_cycle;
    std::optional<Case1Witness> case1;
    std::optional<Case2Witness> case2;
};

// A vertex or a shortest cycle meeting every member of the family.
using HittingObject = std::variant<Vertex, Cycle>;

inline HittingObject min_hitting_cycle(const Graph& g, Kind kind, const LongestFamily& fam) {
    NiceHitting nice = nice_hitting_set(g, kind);
    if (nice.is_vertex()) return std::get<Vertex>(nice.hit);
    const int bound = std::get<Cycle>(nice.hit).length();
    for (int len = 3; len <= bound; ++len)
        for (const Cycle& c : cycles_of_length(g, len))
            if (is_transversal(c.vertex_set(), fam)) return c;
    throw InternalError("no hitting cycle up to the nice hitting cycle's length");
}

namespace detail {

inline bool first_avoiding(const LongestFamily& fam, const Cycle& c, std::vector<Vertex>& out) {
    const Mask cm = mask_of(c.vertices);
    for (std::size_t i = 0; i < fam.size(); ++i)
        if (!(fam.masks[i] & cm)) {
            out = fam.members[i];
            return true;
        }
    return false;
}

inline PathOrCycle as_longest(const LongestFamily& fam, const std::vector<Vertex>& seq) {
    if (fam.kind == Kind::Cycle) return Cycle{seq};
    return Path{seq};
}

}  // namespace detail

// Case of a non-geodetic hitting cycle: a shortcut splits C into two shorter
// cycles, each avoided by some longest member and separated from it.
inline Case1Witness case1_split(const Graph& g, const Cycle& c, const LongestFamily& fam) {
    const int len = c.length();
    std::vector<int> pos(static_cast<std::size_t>(g.order()), -1);
    for (int i = 0; i < len; ++i) pos[static_cast<std::size_t>(c.vertices[static_cast<std::size_t>(i)])] = i;

    std::optional<Path> shortest;
    for (int i = 0; i < len && !shortest; ++i) {
        auto dist = bfs_distances(g, c.vertices[static_cast<std::size_t>(i)]);
        for (int j = i + 1; j < len; ++j)
            if (dist[static_cast<std::size_t>(c.vertices[static_cast<std::size_t>(j)])] < cyclic_distance(i, j, len)) {
                shortest = shortest_path(g, c.vertices[static_cast<std::size_t>(i)], c.vertices[static_cast<std::size_t>(j)]);
                break;
            }
    }
    if (!shortest) throw InputError("case1_split needs a non-geodetic cycle");

    // Some stretch of the shortest path between consecutive cycle hits is
    // shorter than the cycle distance of its ends.
    Case1Witness w;
    const auto& seq = shortest->vertices;
    std::size_t last = 0;
    for (std::size_t k = 1; k < seq.size(); ++k) {
        if (pos[static_cast<std::size_t>(seq[k])] < 0) continue;
        const int a = pos[static_cast<std::size_t>(seq[last])], b = pos[static_cast<std::size_t>(seq[k])];
        if (static_cast<int>(k - last) < cyclic_distance(a, b, len)) {
            w.x = seq[last];
            w.y = seq[k];
            w.shortcut.vertices.assign(seq.begin() + static_cast<std::ptrdiff_t>(last), seq.begin() + static_cast<std::ptrdiff_t>(k) + 1);
            break;
        }
        last = k;
    }
    if (w.x < 0) throw InternalError("shortest path has no short stretch");

    // The two arcs of C between x and y, each closed by the shortcut.
    const int px = pos[static_cast<std::size_t>(w.x)], py = pos[static_cast<std::size_t>(w.y)];
    const auto& inner = w.shortcut.vertices;
    auto close = [&](int step) {
        Cycle out;
        for (int i = py;; i = (i + step + len) % len) {
            out.vertices.push_back(c.vertices[static_cast<std::size_t>(i)]);
            if (i == px) break;
        }
        for (std::size_t k = 1; k + 1 < inner.size(); ++k) out.vertices.push_back(inner[k]);
        return canonical(out);
    };
    w.c1 = close(1);
    w.c2 = close(-1);
    check_true("case1.shorter", w.c1.length() < len && w.c2.length() < len && is_cycle_in(g, w.c1) && is_cycle_in(g, w.c2),
               [&] { return "C=" + to_string(c.vertices) + " C1=" + to_string(w.c1.vertices) + " C2=" + to_string(w.c2.vertices); });

    if (!detail::first_avoiding(fam, w.c1, w.l1) || !detail::first_avoiding(fam, w.c2, w.l2))
        throw InternalError("hitting cycle is not minimal: a shorter split cycle hits every longest member");
    w.k1 = separate_cycle_from_longest(w.c1, detail::as_longest(fam, w.l1), g).separator;
    w.k2 = separate_cycle_from_longest(w.c2, detail::as_longest(fam, w.l2), g).separator;
    const double ell = fam.length;
    check_le("case1.size", static_cast<double>(set_union(w.k1, w.k2).size()), std::sqrt(8.0 * ell),
             [&] { return "K1=" + to_string(w.k1) + " K2=" + to_string(w.k2); });
    return w;
}

// Case of a geodetic hitting cycle: a linear decomposition of the society
// on C with adhesion at most the transaction order p, and the Helly index.
inline Case2Witness case2_society(const Graph& g, const Cycle& c, const LongestFamily& fam) {
    Case2Witness w;
    w.society = Society(g, c.vertices);
    w.transaction = max_transaction(w.society);
    w.p = w.transaction.order();
    w.decomposition = build_linear_decomposition(w.society);
    const auto& ld = w.decomposition;
    check_le("case2.adhesion", ld.adhesion(), w.p, [&] { return "C=" + to_string(c.vertices); });

    const int t = ld.length();
    std::vector<Mask> bag_masks;
    for (const auto& bag : ld.bags) bag_masks.push_back(mask_of(bag));
    int lo = 0, hi = t - 1;
    for (std::size_t m = 0; m < fam.size(); ++m) {
        int first = -1, last = -1;
        bool gap = false;
        for (int i = 0; i < t; ++i) {
            if (fam.masks[m] & bag_masks[static_cast<std::size_t>(i)]) {
                if (first >= 0 && last != i - 1) gap = true;
                if (first < 0) first = i;
                last = i;
            }
        }
        check_true("case2.interval", first >= 0 && !gap, [&] { return "L=" + to_string(fam.members[m]); });
        w.intervals.emplace_back(first, last);
        lo = std::max(lo, first);
        hi = std::min(hi, last);
    }
    check_true("case2.helly", lo <= hi, [&] { return "C=" + to_string(c.vertices); });
    w.index = lo;
    return w;
}

inline VertexSet case2_set(const Case2Witness& w) {
    const auto& bags = w.decomposition.bags;
    const int t = static_cast<int>(bags.size()), i = w.index;
    VertexSet s{w.decomposition.omega_order[static_cast<std::size_t>(i)]};
    if (i > 0) s = set_union(s, set_intersection(bags[static_cast<std::size_t>(i)], bags[static_cast<std::size_t>(i - 1)]));
    if (i + 1 < t) s = set_union(s, set_intersection(bags[static_cast<std::size_t>(i)], bags[static_cast<std::size_t>(i + 1)]));
    return s;
}

inline TransversalCertificate transversal(const Graph& g, Kind kind, const EngineOptions& opt = {}) {
    // K_1 has l = 0, where the bound 33 l^(5/9) vanishes; the theorem needs n >= 2.
    if (kind == Kind::Path && (g.order() < 2 || !is_connected(g)))
        throw InputError("path transversal needs a connected graph with at least 2 vertices");
    if (kind == Kind::Cycle && (g.order() < 3 || !is_two_connected(g)))
        throw InputError("cycle transversal needs a 2-connected graph");
    LongestFamily fam = enumerate_longest(g, kind, opt.oracle);

    TransversalCertificate cert;
    cert.kind = kind;
    cert.n = g.order();
    cert.ell = fam.length;
    cert.bound_used = transversal_bound(cert.n, cert.ell, kind);
    auto describe_cert = [&] { return std::string(to_string(cert.branch)) + " S=" + to_string(cert.s); };

    HittingObject hit = min_hitting_cycle(g, kind, fam);
    if (std::holds_alternative<Vertex>(hit)) {
        cert.branch = Branch::SingleVertex;
        cert.s = {std::get<Vertex>(hit)};
    } else {
        const Cycle& c = std::get<Cycle>(hit);
        cert.hitting_cycle = c;
        if (c.length() <= cert.bound_used && !opt.force_construction) {
            cert.branch = Branch::DirectCycle;
            cert.s = c.vertex_set();
        } else if (!is_geodetic(c, g)) {
            cert.branch = Branch::Case1Split;
            cert.case1 = case1_split(g, c, fam);
            cert.s = set_union(cert.case1->k1, cert.case1->k2);
        } else {
            cert.branch = Branch::Case2Society;
            cert.case2 = case2_society(g, c, fam);
            const int p = cert.case2->p;
            cert.s = case2_set(*cert.case2);
            check_le("case2.claim1", static_cast<double>(cert.s.size()), 2.0 * p + 1.0, describe_cert);
            if (kind == Kind::Path)
                check_le("case2.claim2", p, 16.0 * std::pow(static_cast<double>(cert.ell), 5.0 / 9.0), describe_cert);
            if (c.length() > std::sqrt(8.0 * cert.n))
                check_le("case2.sqrt", p, std::floor(std::sqrt(2.0 * cert.n)) - 1.0, describe_cert);
        }
    }
    check_true("transversal.hits", is_transversal(cert.s, fam), describe_cert);
    check_le("transversal.bound", static_cast<double>(cert.s.size()), cert.bound_used, describe_cert);
    return cert;
}

// Re-validates a certificate and its branch witness from scratch. Returns
// an empty string when everything is consistent.
inline std::string certificate_violation(const Graph& g, const TransversalCertificate& cert, const LongestFamily& fam) {
    if (!is_transversal(cert.s, fam)) return "S misses a longest member";
    if (cert.s.size() > cert.bound_used + kBoundSlack * std::max(1.0, cert.bound_used)) return "S exceeds the bound";
    if (cert.hitting_cycle) {
        if (!is_cycle_in(g, *cert.hitting_cycle)) return "hitting cycle is not a cycle";
        if (!is_transversal(cert.hitting_cycle->vertex_set(), fam)) return "hitting cycle misses a longest member";
    }
    switch (cert.branch) {
        case Branch::SingleVertex:
            if (cert.s.size() != 1) return "single-vertex branch with |S| != 1";
            break;
        case Branch::DirectCycle:
            if (!cert.hitting_cycle || cert.s != cert.hitting_cycle->vertex_set()) return "direct cycle does not match S";
            break;
        case Branch::Case1Split: {
            if (!cert.case1 || !cert.hitting_cycle) return "case 1 without witness";
            const auto& w = *cert.case1;
            const int len = cert.hitting_cycle->length();
            if (!is_path_in(g, w.shortcut) || w.shortcut.front() != w.x || w.shortcut.back() != w.y) return "bad shortcut";
            for (std::size_t k = 1; k + 1 < w.shortcut.vertices.size(); ++k)
                if (contains(cert.hitting_cycle->vertex_set(), w.shortcut.vertices[k])) return "shortcut touches C";
            for (const Cycle* ci : {&w.c1, &w.c2})
                if (!is_cycle_in(g, *ci) || ci->length() >= len) return "split cycle invalid or not shorter";
            if (intersects(w.c1.vertex_set(), make_vertex_set(w.l1)) || intersects(w.c2.vertex_set(), make_vertex_set(w.l2)))
                return "longest member meets its split cycle";
            if (!separates(g, w.k1, w.c1.vertex_set(), make_vertex_set(w.l1)) ||
                !separates(g, w.k2, w.c2.vertex_set(), make_vertex_set(w.l2)))
                return "K_i does not separate";
            if (cert.s != set_union(w.k1, w.k2)) return "S differs from K1 u K2";
            break;
        }
        case Branch::Case2Society: {
            if (!cert.case2) return "case 2 without witness";
            const auto& w = *cert.case2;
            if (!verify_transaction(w.society, w.transaction)) return "transaction invalid";
            auto rep = verify_linear_decomposition(w.society, w.decomposition);
            if (!rep.valid) return "linear decomposition invalid: " + rep.violations.front();
            if (rep.adhesion > w.p) return "adhesion above transaction order";
            for (auto [a, b] : w.intervals)
                if (a > w.index || w.index > b) return "index outside some I_L";
            if (cert.s != case2_set(w)) return "S differs from the separator at the index";
            break;
        }
    }
    return {};
}

}  // namespace lpt

#endif  // LPT_TRANSVERSAL_HPP
