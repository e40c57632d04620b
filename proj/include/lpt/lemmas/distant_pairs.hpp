#ifndef LPT_LEMMAS_DISTANT_PAIRS_HPP
#define LPT_LEMMAS_DISTANT_PAIRS_HPP

#include <algorithm>
#include <utility>
#include <vector>

#include "lpt/checks.hpp"
#include "lpt/errors.hpp"
#include "lpt/graph.hpp"

namespace lpt {

struct DistantPairsResult {
    long long sum = 0;
    double bound = 0.0;  // k^2 / 2
    bool holds = true;
};

// Sum of cycle distances of pairwise disjoint pairs (a_i, b_i), where all a_i
// lie in one segment of the cycle and all b_i in a disjoint segment.
inline DistantPairsResult distant_pairs_sum(const Cycle& c, const std::vector<std::pair<Vertex, Vertex>>& pairs) {
    const int len = c.length();
    if (len < 3 || !all_distinct(c.vertices)) throw InputError("distant pairs need a cycle");
    std::vector<int> pos_of_vertex;
    for (Vertex v : c.vertices) pos_of_vertex.resize(std::max<std::size_t>(pos_of_vertex.size(), static_cast<std::size_t>(v) + 1), -1);
    for (int i = 0; i < len; ++i) pos_of_vertex[static_cast<std::size_t>(c.vertices[static_cast<std::size_t>(i)])] = i;
    auto pos = [&](Vertex v) {
        if (v < 0 || static_cast<std::size_t>(v) >= pos_of_vertex.size() || pos_of_vertex[static_cast<std::size_t>(v)] < 0)
            throw InputError("pair vertex " + std::to_string(v) + " is not on the cycle");
        return pos_of_vertex[static_cast<std::size_t>(v)];
    };
    // Side label per marked position: 1 for a_i, 2 for b_i.
    std::vector<int> side(static_cast<std::size_t>(len), 0);
    for (auto [a, b] : pairs)
        for (auto [v, s] : {std::pair{a, 1}, std::pair{b, 2}}) {
            int p = pos(v);
            if (side[static_cast<std::size_t>(p)] != 0) throw InputError("pairs are not pairwise disjoint");
            side[static_cast<std::size_t>(p)] = s;
        }
    // Disjoint segments exist iff the labels change at most twice around C.
    std::vector<int> labels;
    for (int s : side)
        if (s) labels.push_back(s);
    int changes = 0;
    for (std::size_t i = 0; i < labels.size(); ++i) changes += labels[i] != labels[(i + 1) % labels.size()];
    if (changes > 2) throw InputError("no disjoint segments separate the a_i from the b_i");
    DistantPairsResult r;
    for (auto [a, b] : pairs) r.sum += cyclic_distance(pos(a), pos(b), len);
    const double k = static_cast<double>(pairs.size());
    r.bound = k * k / 2.0;
    r.holds = ge_with_slack(static_cast<double>(r.sum), r.bound);
    check_ge("distantpairs.sum", static_cast<double>(r.sum), r.bound, [&] {
        std::string w = "C=" + to_string(c.vertices) + " pairs=";
        for (auto [a, b] : pairs) w += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
        return w;
    });
    return r;
}

// C_{2k} with a_1..a_k, b_k..b_1 in cyclic order: vertices 0..2k-1, a_i = i-1
// and b_i = 2k - i.
inline std::pair<Cycle, std::vector<std::pair<Vertex, Vertex>>> extremal_distant_pairs(int k) {
    if (k < 2) throw InputError("extremal configuration needs k >= 2");
    Cycle c;
    for (int i = 0; i < 2 * k; ++i) c.vertices.push_back(i);
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (int i = 1; i <= k; ++i) pairs.emplace_back(i - 1, 2 * k - i);
    return {c, pairs};
}

}  // namespace lpt

#endif  // LPT_LEMMAS_DISTANT_PAIRS_HPP
