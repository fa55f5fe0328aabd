#pragma once

#include "vmstar/plan.hpp"

namespace vmstar {

// LCs along a shortest a-b path; afterwards (a,b) is an edge.
Plan make_pair(const Graph& g, const Label& a, const Label& b);

// Connect a-b, then walk the b-c shortest path complementing only while a
// and c stay non-adjacent; the induced graph on {a,b,c} ends up connected.
Plan make_triple(const Graph& g, const Label& a, const Label& b, const Label& c);

// Any connected target on at most 3 contained vertices is a vertex-minor of
// a connected graph: vertices outside the target are eliminated one at a
// time, deleting or complement-then-deleting so every intermediate graph
// stays connected; final local complementations shape the remainder into
// the target exactly. The returned plan replays to `target`.
Plan small_vertex_minor(const Graph& g, const Graph& target);

}  // namespace vmstar
