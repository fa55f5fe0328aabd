#include "vmstar/small_target.hpp"

#include <algorithm>

namespace vmstar {

namespace {

void lc(Graph& work, std::vector<Move>& moves, const Label& v) {
    work.local_complement_inplace_i(work.index_of(v));
    moves.push_back(Move::lc(v));
}

Plan as_plan(const Graph& g, std::vector<Move> moves, std::vector<Label> targets) {
    Plan p;
    p.moves = std::move(moves);
    p.source_vertices = g.labels();
    p.target_vertices = std::move(targets);
    return p;
}

}  // namespace

Plan make_pair(const Graph& g, const Label& a, const Label& b) {
    Graph work = g;
    std::vector<Move> moves;
    if (!work.adjacent(a, b)) {
        std::vector<Label> path = work.shortest_path(a, b);
        if (path.empty()) throw NotConnected("'" + a.text() + "' and '" + b.text() + "' are not connected");
        for (size_t i = 1; i + 1 < path.size(); ++i) lc(work, moves, path[i]);
    }
    if (!work.adjacent(a, b)) throw Error("internal: path complementation left a,b non-adjacent");
    return as_plan(g, std::move(moves), {a, b});
}

Plan make_triple(const Graph& g, const Label& a, const Label& b, const Label& c) {
    Graph work = g;
    std::vector<Move> moves;
    if (!work.adjacent(a, b)) {
        std::vector<Label> path = work.shortest_path(a, b);
        if (path.empty()) throw NotConnected("'" + a.text() + "' and '" + b.text() + "' are not connected");
        for (size_t i = 1; i + 1 < path.size(); ++i) lc(work, moves, path[i]);
    }
    std::vector<Label> path = work.shortest_path(b, c);
    if (path.empty()) throw NotConnected("'" + b.text() + "' and '" + c.text() + "' are not connected");
    for (size_t i = 1; i + 1 < path.size(); ++i)
        if (!work.adjacent(a, c)) lc(work, moves, path[i]);

    Graph shape = work.induced({a, b, c});
    if (!shape.is_connected()) throw Error("internal: triple is not connected after the walk");
    return as_plan(g, std::move(moves), {a, b, c});
}

Plan small_vertex_minor(const Graph& g, const Graph& target) {
    int k = target.size();
    if (k < 1 || k > 3) throw InvalidTarget("small targets have 1 to 3 vertices");
    if (!target.is_connected()) throw InvalidTarget("small targets must be connected");
    for (const auto& t : target.labels())
        if (!g.has_vertex(t)) throw InvalidTarget("target vertex '" + t.text() + "' not in graph");
    if (!g.is_connected()) throw NotConnected("source graph must be connected");

    Graph work = g;
    std::vector<Move> moves;
    // Eliminate non-target vertices in ascending order; one of deletion or
    // complement-then-deletion always keeps the survivor connected.
    for (const auto& v : g.labels()) {
        if (target.has_vertex(v)) continue;
        Graph deleted = work.erased(v);
        if (deleted.is_connected()) {
            moves.push_back(Move::mz(v));
            work = std::move(deleted);
            continue;
        }
        Graph complemented = work.local_complement(v).erased(v);
        if (!complemented.is_connected())
            throw Error("internal: neither deletion keeps the graph connected");
        moves.push_back(Move::my(v));
        work = std::move(complemented);
    }

    // The remainder is a connected graph on the target vertices; at most
    // two local complementations reshape it (star <-> triangle, or a star
    // re-centered through the triangle).
    for (int attempt = 0; attempt < 3 && !(work == target); ++attempt) {
        if (k == 3) {
            auto cur = work.classify();
            auto want = target.classify();
            if (cur.shape == GraphShape::Complete && want.shape == GraphShape::Star) {
                lc(work, moves, *want.center);
            } else if (cur.shape == GraphShape::Star && want.shape == GraphShape::Complete) {
                lc(work, moves, *cur.center);
            } else if (cur.shape == GraphShape::Star && want.shape == GraphShape::Star) {
                lc(work, moves, *cur.center);  // through the triangle
            } else {
                throw Error("internal: unexpected 3-vertex shape");
            }
        } else {
            break;  // 1 or 2 vertices: the only connected graph is the target
        }
    }
    if (!(work == target)) throw Error("internal: could not reshape the remainder into the target");

    Plan p = as_plan(g, std::move(moves), target.labels());
    if (!(apply_plan(g, p) == target)) throw Error("internal: small target replay mismatch");
    return p;
}

}  // namespace vmstar
