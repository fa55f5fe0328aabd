#pragma once

#include <vector>

#include "vmstar/graph.hpp"
#include "vmstar/randgen.hpp"

namespace vmstar::test {

inline std::vector<Label> labels_upto(int n) {
    std::vector<Label> out;
    for (int i = 1; i <= n; ++i) out.emplace_back(i);
    return out;
}

// Reference local complementation straight from the neighborhood formula
// N'_u = N_u symdiff (N_v minus u) for u ~ v; kept independent of the
// bitset row-XOR implementation it checks.
inline Graph lc_reference(const Graph& g, const Label& v) {
    Graph out = Graph::edgeless(g.labels());
    int vi = g.index_of(v);
    for (int u = 0; u < g.size(); ++u) {
        for (int w = u + 1; w < g.size(); ++w) {
            bool edge = g.adjacent_i(u, w);
            if (g.adjacent_i(u, vi) && g.adjacent_i(w, vi)) edge = !edge;
            if (edge) out.add_edge_i(u, w);
        }
    }
    return out;
}

// Distance-hereditary by the distance definition: every connected induced
// subgraph preserves pairwise distances. Exponential; for oracle use only.
inline bool dh_by_distances(const Graph& g) {
    int n = g.size();
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<Label> sub;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) sub.push_back(g.label(i));
        Graph h = g.induced(sub);
        if (!h.is_connected()) continue;
        for (size_t a = 0; a < sub.size(); ++a)
            for (size_t b = a + 1; b < sub.size(); ++b) {
                auto dg = g.distance(sub[a], sub[b]);
                auto dh = h.distance(sub[a], sub[b]);
                if (dg && dh && *dg != *dh) return false;
            }
    }
    return true;
}

}  // namespace vmstar::test
