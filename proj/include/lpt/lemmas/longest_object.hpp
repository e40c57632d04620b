#ifndef LPT_LEMMAS_LONGEST_OBJECT_HPP
#define LPT_LEMMAS_LONGEST_OBJECT_HPP

#include <string>
#include <variant>

#include "lpt/graph.hpp"

namespace lpt {

// A path or a cycle, as taken by the lemmas that accept either.
using PathOrCycle = std::variant<Path, Cycle>;

inline const std::vector<Vertex>& sequence_of(const PathOrCycle& x) {
    return std::visit([](const auto& v) -> const std::vector<Vertex>& { return v.vertices; }, x);
}

inline int length_of(const PathOrCycle& x) {
    return std::visit([](const auto& v) { return v.length(); }, x);
}

inline bool is_cycle(const PathOrCycle& x) { return std::holds_alternative<Cycle>(x); }

inline VertexSet vertex_set_of(const PathOrCycle& x) { return make_vertex_set(sequence_of(x)); }

inline bool is_valid_in(const Graph& g, const PathOrCycle& x) {
    return is_cycle(x) ? is_cycle_in(g, std::get<Cycle>(x)) : is_path_in(g, std::get<Path>(x));
}

inline std::string describe(const PathOrCycle& x) {
    return std::string(is_cycle(x) ? "cycle " : "path ") + to_string(sequence_of(x));
}

// Distance between positions i and j along the object.
inline int along_distance(const PathOrCycle& x, int i, int j) {
    return is_cycle(x) ? cyclic_distance(i, j, length_of(x)) : std::abs(i - j);
}

}  // namespace lpt

#endif  // LPT_LEMMAS_LONGEST_OBJECT_HPP
