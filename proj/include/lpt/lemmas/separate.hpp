#ifndef LPT_LEMMAS_SEPARATE_HPP
#define LPT_LEMMAS_SEPARATE_HPP

#include <cmath>

#include "lpt/checks.hpp"
#include "lpt/errors.hpp"
#include "lpt/flow.hpp"
#include "lpt/lemmas/longest_object.hpp"
#include "lpt/longest.hpp"

namespace lpt {

// Minimum separator between a cycle and a disjoint longest path or cycle;
// its size is at most sqrt(2|L|).
inline CutCertificate separate_cycle_from_longest(const Cycle& c, const PathOrCycle& l, const Graph& g) {
    if (!is_cycle_in(g, c)) throw InputError("not a cycle of the graph: " + to_string(c.vertices));
    if (!is_valid_in(g, l)) throw InputError("not a path or cycle of the graph: " + describe(l));
    if (length_of(l) != longest_length(g, is_cycle(l) ? Kind::Cycle : Kind::Path))
        throw InputError("not a longest member: " + describe(l));
    VertexSet cv = c.vertex_set(), lv = vertex_set_of(l);
    if (intersects(cv, lv)) throw InputError("cycle and longest member are not disjoint");
    CutCertificate cut = min_vertex_cut(g, cv, lv);
    check_le("separate.size", static_cast<double>(cut.separator.size()), std::sqrt(2.0 * length_of(l)), [&] {
        return "C=" + to_string(c.vertices) + " L=" + describe(l) + " S=" + to_string(cut.separator);
    });
    return cut;
}

}  // namespace lpt

#endif  // LPT_LEMMAS_SEPARATE_HPP
