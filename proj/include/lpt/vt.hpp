#ifndef LPT_VT_HPP
#define LPT_VT_HPP

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "lpt/canon.hpp"
#include "lpt/checks.hpp"
#include "lpt/connectivity.hpp"
#include "lpt/errors.hpp"
#include "lpt/generators.hpp"
#include "lpt/longest.hpp"

namespace lpt {

enum class VTFamily { Circulant, Cayley, Named };

inline const char* to_string(VTFamily f) {
    switch (f) {
        case VTFamily::Circulant: return "circulant";
        case VTFamily::Cayley: return "cayley";
        case VTFamily::Named: return "named";
    }
    return "?";
}

struct VTInstance {
    Graph graph;
    VTFamily family = VTFamily::Named;
    std::string name;  // e.g. "C16(1,3)" or "petersen"
    int degree = 0;
};

inline VTInstance gen_circulant(int n, std::vector<int> jumps) {
    if (n < 3) throw InputError("circulant needs n >= 3");
    std::sort(jumps.begin(), jumps.end());
    if (jumps.empty() || std::adjacent_find(jumps.begin(), jumps.end()) != jumps.end())
        throw InputError("circulant connection set must be nonempty and distinct");
    for (int j : jumps)
        if (j < 1 || 2 * j > n) throw InputError("circulant jump " + std::to_string(j) + " outside 1.." + std::to_string(n / 2));
    VTInstance inst;
    inst.graph = circulant_graph(n, jumps);
    if (!is_connected(inst.graph)) throw InputError("circulant parameters give a disconnected graph");
    inst.family = VTFamily::Circulant;
    inst.name = "C" + std::to_string(n) + "(";
    for (std::size_t i = 0; i < jumps.size(); ++i) inst.name += (i ? "," : "") + std::to_string(jumps[i]);
    inst.name += ")";
    inst.degree = inst.graph.degree(0);
    return inst;
}

// Every connected circulant on n vertices, one per connection set, in
// increasing bitmask order of the set.
inline std::vector<VTInstance> all_connected_circulants(int n) {
    std::vector<VTInstance> out;
    const int half = n / 2;
    for (int mask = 1; mask < (1 << half); ++mask) {
        std::vector<int> jumps;
        int g = n;
        for (int j = 1; j <= half; ++j)
            if (mask & (1 << (j - 1))) {
                jumps.push_back(j);
                g = std::gcd(g, j);
            }
        if (g != 1) continue;
        out.push_back(gen_circulant(n, jumps));
    }
    return out;
}

// Finite group given by its multiplication table, plus a generating set.
struct GroupTable {
    int order = 0;
    std::vector<std::vector<int>> mul;  // mul[i][j] = i * j
    std::vector<int> generators;
};

// Format: order k; k rows of k products; generators on the last line.
inline GroupTable parse_group_table(const std::string& text) {
    std::istringstream in(text);
    GroupTable t;
    if (!(in >> t.order) || t.order < 1 || t.order > 256) throw InputError("group table: bad order");
    t.mul.assign(static_cast<std::size_t>(t.order), std::vector<int>(static_cast<std::size_t>(t.order)));
    for (auto& row : t.mul)
        for (int& x : row) {
            if (!(in >> x)) throw InputError("group table: truncated table");
            if (x < 0 || x >= t.order) throw InputError("group table: entry out of range");
        }
    int s = 0;
    while (in >> s) t.generators.push_back(s);
    if (!in.eof()) throw InputError("group table: non-integer token in generator list");
    return t;
}

inline void validate_group(const GroupTable& t) {
    const int k = t.order;
    auto m = [&](int a, int b) { return t.mul[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; };
    int e = -1;
    for (int c = 0; c < k && e < 0; ++c) {
        bool ok = true;
        for (int x = 0; x < k && ok; ++x) ok = m(c, x) == x && m(x, c) == x;
        if (ok) e = c;
    }
    if (e < 0) throw InputError("group table: no identity");
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            for (int c = 0; c < k; ++c)
                if (m(m(a, b), c) != m(a, m(b, c))) throw InputError("group table: not associative");
    auto inverse = [&](int a) {
        for (int b = 0; b < k; ++b)
            if (m(a, b) == e) return b;
        throw InputError("group table: element without inverse");
    };
    for (int a = 0; a < k; ++a) inverse(a);
    std::vector<int> gens = t.generators;
    std::sort(gens.begin(), gens.end());
    if (gens.empty() || std::adjacent_find(gens.begin(), gens.end()) != gens.end())
        throw InputError("group table: generator set must be nonempty and distinct");
    for (int s : gens) {
        if (s < 0 || s >= k) throw InputError("group table: generator out of range");
        if (s == e) throw InputError("group table: identity among generators");
        if (!std::binary_search(gens.begin(), gens.end(), inverse(s))) throw InputError("group table: generator set not closed under inverse");
    }
}

// Cayley graph: x ~ x * s for s in the generating set.
inline VTInstance gen_cayley(const GroupTable& t, std::string name = "cayley") {
    validate_group(t);
    VTInstance inst;
    inst.graph = Graph(t.order);
    for (int x = 0; x < t.order; ++x)
        for (int s : t.generators) ensure_edge(inst.graph, x, t.mul[static_cast<std::size_t>(x)][static_cast<std::size_t>(s)]);
    if (!is_connected(inst.graph)) throw InputError("group table: generators do not generate the group");
    inst.family = VTFamily::Cayley;
    inst.name = std::move(name);
    inst.degree = inst.graph.degree(0);
    return inst;
}

// A named graph, admitted only when vertex transitivity is verified.
inline VTInstance gen_named(Graph g, std::string name) {
    if (g.order() > 12) throw InputError("named instances are verified only up to 12 vertices");
    if (!is_connected(g)) throw InputError("named instance is disconnected");
    if (!is_vertex_transitive(g)) throw InputError(name + " is not vertex-transitive");
    VTInstance inst;
    inst.degree = g.order() ? g.degree(0) : 0;
    inst.graph = std::move(g);
    inst.family = VTFamily::Named;
    inst.name = std::move(name);
    return inst;
}

struct CorollaryReport {
    int n = 0;
    int degree = 0;
    int ell = 0;        // longest path, edges
    int ell_cycle = 0;  // longest cycle, vertices
    int lpt = 0;
    int connectivity = 0;
};

inline CorollaryReport corollary_check(const VTInstance& inst) {
    const Graph& g = inst.graph;
    if (g.order() < 3 || !is_connected(g)) throw InputError("corollary needs a connected graph on at least 3 vertices");
    CorollaryReport r;
    r.n = g.order();
    r.degree = inst.degree;
    r.ell = longest_path_length(g);
    r.ell_cycle = longest_cycle_length(g);
    r.lpt = static_cast<int>(exact_transversal_number_implicit(g, Kind::Path).vertices.size());
    r.connectivity = vertex_connectivity(g);
    auto who = [&] { return inst.name; };
    const double ell = r.ell, n = r.n;

    for (Vertex v = 0; v < g.order(); ++v)
        check_true("vt.on_longest_path", exists_path_of_length_through(g, v, r.ell), [&] { return inst.name + " v=" + std::to_string(v); });
    check_ge("corollary.path_length", ell, n / r.lpt - 1.0, who);
    check_le("corollary.product", n, (ell + 1.0) * r.lpt, who);
    check_le("corollary.theorem", r.lpt, 33.0 * std::pow(ell, 5.0 / 9.0), who);
    check_le("corollary.chain", n, 66.0 * std::pow(ell, 14.0 / 9.0), who);
    if (r.degree == 2) {
        check_true("corollary.cycle", is_cycle_graph(g), who);
    } else if (r.degree >= 3) {
        check_true("corollary.watkins", 3 * r.connectivity > 2 * r.degree, who);
        check_ge("corollary.three_connected", r.connectivity, 3.0, who);
        check_ge("corollary.bondy_locke", r.ell_cycle, 0.4 * ell, who);
    }
    return r;
}

}  // namespace lpt

#endif  // LPT_VT_HPP
