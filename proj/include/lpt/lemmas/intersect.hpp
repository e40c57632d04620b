#ifndef LPT_LEMMAS_INTERSECT_HPP
#define LPT_LEMMAS_INTERSECT_HPP

#include <algorithm>
#include <optional>

#include "lpt/checks.hpp"
#include "lpt/errors.hpp"
#include "lpt/flow.hpp"
#include "lpt/lemmas/longest_object.hpp"
#include "lpt/longest.hpp"

namespace lpt {

struct IntersectionVerdict {
    bool two_linked = false;  // two disjoint V(L1)-V(L2) paths exist
    bool intersect = false;
    // Endpoint distances of two linking paths on L1 and L2 when the objects
    // are disjoint; such a configuration contradicts maximality.
    std::optional<int> d1;
    std::optional<int> d2;
};

inline void require_longest_or_locally_longest(const PathOrCycle& x, const Graph& g) {
    if (!is_valid_in(g, x)) throw InputError("not a path or cycle of the graph: " + describe(x));
    if (is_cycle(x)) {
        if (length_of(x) != longest_cycle_length(g)) throw InputError("not a longest cycle: " + describe(x));
    } else if (!is_locally_longest(std::get<Path>(x), g)) {
        throw InputError("not a locally-longest path: " + describe(x));
    }
}

// If two disjoint connecting paths exist, the two objects must meet.
inline IntersectionVerdict check_longest_intersection(const PathOrCycle& l1, const PathOrCycle& l2, const Graph& g) {
    require_longest_or_locally_longest(l1, g);
    require_longest_or_locally_longest(l2, g);
    IntersectionVerdict v;
    VertexSet s1 = vertex_set_of(l1), s2 = vertex_set_of(l2);
    v.intersect = intersects(s1, s2);
    VertexFlow flow(g, s1, s2, VertexFlow::Options{{}, false, 2});
    v.two_linked = flow.value() >= 2;
    if (v.two_linked && !v.intersect) {
        auto paths = flow.disjoint_paths();
        auto pos = [](const PathOrCycle& x, Vertex w) {
            const auto& seq = sequence_of(x);
            return static_cast<int>(std::find(seq.begin(), seq.end(), w) - seq.begin());
        };
        v.d1 = along_distance(l1, pos(l1, paths[0].front()), pos(l1, paths[1].front()));
        v.d2 = along_distance(l2, pos(l2, paths[0].back()), pos(l2, paths[1].back()));
    }
    if (v.two_linked) {
        check_true("intersect.meet", v.intersect, [&] {
            std::string w = describe(l1) + " / " + describe(l2);
            if (v.d1) w += " d1=" + std::to_string(*v.d1) + " d2=" + std::to_string(*v.d2);
            return w;
        });
    }
    return v;
}

}  // namespace lpt

#endif  // LPT_LEMMAS_INTERSECT_HPP
