#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "vmstar/word.hpp"

namespace vmstar {

// Undirected multigraph with unique integer edge ids; multi-edges and
// self-loops allowed. A self-loop counts twice toward the degree.
class MultiGraph {
public:
    struct Edge {
        int id;
        Label u, v;
        bool loop() const { return u == v; }
    };

    MultiGraph() = default;
    explicit MultiGraph(std::vector<Label> vertices);

    void add_vertex(const Label& v);
    // Adds an edge with an explicit id; ids must be unique.
    void add_edge(int id, const Label& u, const Label& v);
    // Adds an edge with the next free id; returns it.
    int add_edge(const Label& u, const Label& v);

    int vertex_count() const { return int(vertices_.size()); }
    int edge_count() const { return int(edges_.size()); }
    const std::vector<Label>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int id) const;
    bool has_edge_id(int id) const;

    int degree(const Label& v) const;
    bool is_regular(int k) const;
    // Edge ids incident to v, ascending; loops listed once.
    std::vector<int> incident_ids(const Label& v) const;
    bool is_connected() const;  // vertices with degree 0 count as components

    const Label& other_end(int edge_id, const Label& from) const;

    friend bool operator==(const MultiGraph& a, const MultiGraph& b);

private:
    std::vector<Label> vertices_;  // sorted, unique
    std::vector<Edge> edges_;      // sorted by id
};

// A closed trail using every edge exactly once, stored as the start vertex
// plus the edge-id sequence. For a 4-regular multigraph on k vertices the
// induced word m(U) visits every vertex exactly twice.
class EulerianTour {
public:
    EulerianTour() = default;
    // Copies the graph into shared storage; tours derived from this one
    // (kappa, rotations) share it.
    EulerianTour(const MultiGraph& g, Label start, std::vector<int> edge_seq);
    EulerianTour(std::shared_ptr<const MultiGraph> g, Label start, std::vector<int> edge_seq);

    const MultiGraph& graph() const { return *graph_; }
    const std::shared_ptr<const MultiGraph>& graph_ptr() const { return graph_; }
    const Label& start() const { return start_; }
    const std::vector<int>& edge_sequence() const { return edge_seq_; }
    int length() const { return int(edge_seq_.size()); }

    // Vertex visited before traversing edge_seq[i]; vertex_at(0) == start.
    const Label& vertex_at(int i) const { return verts_[i]; }
    Dow induced_word() const;

    // Reverses the first subtrail that starts and ends at v; identity when
    // the enclosed subtrail is empty (the self-loop case).
    EulerianTour kappa(const Label& v) const;

    EulerianTour reversed() const;
    EulerianTour rotated(int shift) const;
    // Minimal edge-id sequence over rotations and reversal; identifies the
    // tour's equivalence class.
    std::vector<int> canonical_key() const;
    bool equivalent(const EulerianTour& other) const;

private:
    void build_vertex_seq();

    std::shared_ptr<const MultiGraph> graph_;
    Label start_;
    std::vector<int> edge_seq_;
    std::vector<Label> verts_;  // one per step
};

// Hierholzer's construction, deterministic: the tour starts at the least
// vertex and always extends along the least unused incident edge id.
EulerianTour eulerian_tour(const MultiGraph& g);

// Enumerates every Eulerian tour that starts at `start` (both directions of
// every class appear). The callback may return false to stop early. Throws
// BudgetExceeded when more than `budget` tours would be emitted.
void enumerate_eulerian_tours(const MultiGraph& g, const Label& start,
                              const std::function<bool(const EulerianTour&)>& visit,
                              long long budget = 2'000'000);

// Cycle on the word's letter positions with equal letters identified; the
// returned tour U satisfies m(U) == the word.
std::pair<MultiGraph, EulerianTour> multigraph_from_word(const Dow& word);

}  // namespace vmstar
