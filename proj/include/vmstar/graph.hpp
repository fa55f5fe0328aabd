#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vmstar/bitset.hpp"
#include "vmstar/errors.hpp"
#include "vmstar/label.hpp"

namespace vmstar {

enum class GraphShape { Star, Complete, Other };

struct Classification {
    GraphShape shape;
    std::optional<Label> center;  // set iff shape == Star
};

// Simple undirected graph with ordered, stable vertex labels. Vertices are
// addressed either by label or by dense index (the index of the label in
// sorted order). Adjacency is one bit row per vertex, so a local
// complementation is a batch of row XORs.
//
// Graphs behave as immutable values: the rewrite operations return new
// graphs. The *_inplace variants exist for the solver's working copy.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::vector<Label> labels);

    static Graph star(const std::vector<Label>& labels, const Label& center);
    static Graph complete(const std::vector<Label>& labels);
    static Graph edgeless(const std::vector<Label>& labels);
    static Graph path(const std::vector<Label>& labels_in_order);
    static Graph cycle(const std::vector<Label>& labels_in_order);

    int size() const { return int(labels_.size()); }
    const std::vector<Label>& labels() const { return labels_; }
    const Label& label(int i) const { return labels_[i]; }

    bool has_vertex(const Label& v) const;
    // Dense index of a label; throws UnknownVertex if absent.
    int index_of(const Label& v) const;

    bool adjacent(const Label& u, const Label& v) const { return adjacent_i(index_of(u), index_of(v)); }
    bool adjacent_i(int u, int v) const { return adj_[u].get(v); }

    int degree(const Label& v) const { return adj_[index_of(v)].count(); }
    int degree_i(int v) const { return adj_[v].count(); }

    std::vector<Label> neighbors(const Label& v) const;
    const Bitset& row(int v) const { return adj_[v]; }

    int edge_count() const;
    std::vector<std::pair<Label, Label>> edges() const;

    // Builders (index- and label-based); no self-loops, idempotent.
    void add_edge(const Label& u, const Label& v) { add_edge_i(index_of(u), index_of(v)); }
    void add_edge_i(int u, int v);
    void remove_edge_i(int u, int v);
    void toggle_edge_i(int u, int v);

    // --- rewrite operations ---

    // Complement the induced subgraph on the neighborhood of v.
    Graph local_complement(const Label& v) const;
    void local_complement_inplace_i(int v);

    // tau_v . tau_u . tau_v, defined on an edge (u,v).
    Graph pivot(const Label& u, const Label& v) const;
    void pivot_inplace_i(int u, int v);

    // Pivot on the edge (v, min(N_v)); identity when v is isolated.
    Graph pivot_at_vertex(const Label& v) const;

    Graph induced(const std::vector<Label>& keep) const;
    Graph erased(const Label& v) const;  // induced on V \ {v}
    Graph complemented() const;

    // --- queries ---

    bool is_connected() const;  // true for the empty graph
    std::vector<std::vector<Label>> connected_components() const;
    // Hop distance; nullopt when u,v are in different components.
    std::optional<int> distance(const Label& u, const Label& v) const;
    std::vector<Label> cut_vertices() const;
    Classification classify() const;

    // BFS shortest path from s to t, inclusive of both ends; ties broken
    // toward least-label predecessors. Empty if unreachable.
    std::vector<Label> shortest_path(const Label& s, const Label& t) const;

    // Index-set of the component containing vertex i.
    Bitset component_of_i(int i) const;

    // Byte string identifying the graph among graphs with the same label set.
    std::string adjacency_key() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.labels_ == b.labels_ && a.adj_ == b.adj_;
    }
    friend bool operator!=(const Graph& a, const Graph& b) { return !(a == b); }

private:
    std::vector<Label> labels_;  // sorted, unique
    std::vector<Bitset> adj_;
};

}  // namespace vmstar
