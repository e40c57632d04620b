#ifndef LPT_LEMMAS_NICE_HITTING_HPP
#define LPT_LEMMAS_NICE_HITTING_HPP

#include <string>
#include <variant>

#include "lpt/block_cut_tree.hpp"
#include "lpt/checks.hpp"
#include "lpt/connectivity.hpp"
#include "lpt/errors.hpp"
#include "lpt/longest.hpp"

namespace lpt {

enum class NiceCase {
    CommonVertex,   // some vertex lies in every subtree T(P)
    SingleContact,  // a longest path meets the common block in one vertex x
    BridgeBlock,    // the common block is a K_2
    BlockCycle,     // a longest cycle of the common block
    LongestCycle,   // cycle kind: any longest cycle of a 2-connected graph
};

inline const char* to_string(NiceCase c) {
    switch (c) {
        case NiceCase::CommonVertex: return "common-vertex";
        case NiceCase::SingleContact: return "single-contact";
        case NiceCase::BridgeBlock: return "bridge-block";
        case NiceCase::BlockCycle: return "block-cycle";
        case NiceCase::LongestCycle: return "longest-cycle";
    }
    return "?";
}

struct NiceHitting {
    std::variant<Vertex, Cycle> hit;
    NiceCase reason = NiceCase::CommonVertex;

    bool is_vertex() const { return std::holds_alternative<Vertex>(hit); }
    VertexSet vertices() const {
        if (is_vertex()) return {std::get<Vertex>(hit)};
        return std::get<Cycle>(hit).vertex_set();
    }
};

namespace detail {

// Lexicographically first longest cycle of G[block], in host ids.
inline Cycle longest_cycle_in(const Graph& g, const VertexSet& block) {
    Subgraph sub = induced_subgraph(g, block);
    LongestFamily fam = enumerate_longest(sub.graph, Kind::Cycle, OracleConfig{64, 4'000'000});
    if (fam.members.empty()) throw InternalError("block without a cycle");
    return canonical(Cycle{sub.lift(fam.members.front())});
}

}  // namespace detail

// A single vertex or a cycle meeting every longest path (kind = path, g
// connected) or every longest cycle (kind = cycle, g 2-connected). Follows
// the block-cut tree / Helly argument; the output is validated against the
// enumerated family.
inline NiceHitting nice_hitting_set(const Graph& g, Kind kind, const OracleConfig& cfg = {}) {
    NiceHitting out;
    LongestFamily fam;
    if (kind == Kind::Cycle) {
        if (g.order() < 3 || !is_two_connected(g)) throw InputError("cycle kind needs a 2-connected graph");
        fam = enumerate_longest(g, Kind::Cycle, cfg);
        out.hit = canonical(fam.cycle(0));
        out.reason = NiceCase::LongestCycle;
    } else {
        if (g.order() == 0 || !is_connected(g)) throw InputError("path kind needs a connected graph");
        fam = enumerate_longest(g, Kind::Path, cfg);
        BlockCutTree bct = block_cut_tree(g);
        const int nodes = bct.node_count();
        // Count, per tree node, the members whose subtree contains it.
        std::vector<std::size_t> hits(static_cast<std::size_t>(nodes), 0);
        for (const auto& m : fam.members) {
            std::vector<char> in(static_cast<std::size_t>(nodes), 0);
            for (Vertex v : m) {
                in[static_cast<std::size_t>(v)] = 1;
                for (int b : bct.blocks_of[static_cast<std::size_t>(v)]) in[static_cast<std::size_t>(bct.block_node(b))] = 1;
            }
            for (int x = 0; x < nodes; ++x) hits[static_cast<std::size_t>(x)] += in[static_cast<std::size_t>(x)];
        }
        int common = -1;
        for (int x = 0; x < nodes && common < 0; ++x)
            if (hits[static_cast<std::size_t>(x)] == fam.size()) common = x;
        check_true("nicehitting.helly", common >= 0, [&] { return "graph with " + std::to_string(g.order()) + " vertices"; });
        if (common < bct.n) {
            out.hit = Vertex{common};
            out.reason = NiceCase::CommonVertex;
        } else {
            const VertexSet& block = bct.blocks[static_cast<std::size_t>(common - bct.n)];
            std::optional<Vertex> single;
            for (const auto& m : fam.members) {
                VertexSet meet = set_intersection(make_vertex_set(m), block);
                if (meet.size() == 1) {
                    single = meet.front();
                    break;
                }
            }
            if (single) {
                out.hit = *single;
                out.reason = NiceCase::SingleContact;
            } else if (block.size() == 2) {
                out.hit = block.front();
                out.reason = NiceCase::BridgeBlock;
            } else {
                out.hit = detail::longest_cycle_in(g, block);
                out.reason = NiceCase::BlockCycle;
            }
        }
    }
    check_true("nicehitting.transversal", is_transversal(out.vertices(), fam), [&] {
        return std::string(to_string(out.reason)) + " " + to_string(out.vertices());
    });
    return out;
}

}  // namespace lpt

#endif  // LPT_LEMMAS_NICE_HITTING_HPP
