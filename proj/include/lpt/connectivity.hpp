#ifndef LPT_CONNECTIVITY_HPP
#define LPT_CONNECTIVITY_HPP

#include <algorithm>
#include <string>

#include "lpt/flow.hpp"
#include "lpt/graph.hpp"

namespace lpt {

enum class ConnectivityClass { Disconnected, Connected, TwoConnected, ThreeConnectedPlus };

inline const char* to_string(ConnectivityClass c) {
    switch (c) {
        case ConnectivityClass::Disconnected: return "disconnected";
        case ConnectivityClass::Connected: return "connected";
        case ConnectivityClass::TwoConnected: return "2-connected";
        case ConnectivityClass::ThreeConnectedPlus: return "3-connected+";
    }
    return "?";
}

// Vertex connectivity, capped at `limit`. Complete graphs K_n report n - 1.
inline int vertex_connectivity(const Graph& g, int limit = 1 << 20) {
    const int n = g.order();
    if (n <= 1) return 0;
    if (!is_connected(g)) return 0;
    int best = std::min(n - 1, limit);
    for (int u = 0; u < n && best > 0; ++u)
        for (int v = u + 1; v < n && best > 0; ++v) {
            if (g.has_edge(u, v)) continue;
            best = std::min(best, local_connectivity(g, u, v, best));
        }
    return best;
}

inline bool is_k_connected(const Graph& g, int k) {
    if (g.order() <= k) return false;
    return vertex_connectivity(g, k) >= k;
}

inline bool is_two_connected(const Graph& g) { return is_k_connected(g, 2); }

inline ConnectivityClass connectivity_class(const Graph& g) {
    if (g.order() < 1) throw InputError("connectivity_class needs at least one vertex");
    if (!is_connected(g)) return ConnectivityClass::Disconnected;
    int kappa = vertex_connectivity(g, 3);
    if (g.order() >= 4 && kappa >= 3) return ConnectivityClass::ThreeConnectedPlus;
    if (g.order() >= 3 && kappa >= 2) return ConnectivityClass::TwoConnected;
    return ConnectivityClass::Connected;
}

}  // namespace lpt

#endif  // LPT_CONNECTIVITY_HPP
