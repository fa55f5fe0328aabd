#pragma once

#include <optional>
#include <set>
#include <vector>

#include "vmstar/plan.hpp"

namespace vmstar {

// Partition of a target set V' = B + L + {center}: B carries the bad edges
// (the vertices of positive degree in G[V' \ {center}]), L is clean. When B
// is nonempty and G[B] is a star the induced graph is a star-star graph;
// when G[B] is complete it is a complete-star graph.
struct TargetForm {
    enum class Kind { Star, StarStar, CompleteStar, Other };
    Kind kind;
    Label center;
    std::vector<Label> bad;    // B, ascending
    std::vector<Label> clean;  // L, ascending
};

// Classifies g[target] against the star-star / complete-star shapes;
// requires some vertex of target adjacent to all others (else Kind::Other
// with an unspecified center).
TargetForm classify_target_form(const Graph& g, const std::vector<Label>& target);

// The bad-edge removal predicate: a vertex u outside V' adjacent to all of
// B and none of L such that either u is not adjacent to the center, or some
// helper h is adjacent to u and the center but to nothing else in V'. The
// pair found, scanning u then h in ascending label order.
struct PredicateWitness {
    Label u;
    std::optional<Label> helper;
};
std::optional<PredicateWitness> predicate_p(const Graph& g, const TargetForm& form);

struct SolverOptions {
    // Skip the distance-hereditary certification and trust the caller; a
    // failed predicate is then still reported as NotVertexMinor.
    bool assume_dh = false;
};

enum class SolveStatus { Plan, NotVertexMinor, UnknownNotDH };

struct SolverVerdict {
    SolveStatus status;
    std::optional<Plan> plan;  // set iff status == Plan; replays to the star
    bool certified_dh;
};

// Attaches f to the star already present on attached+{f} (center `center`)
// by pivots or a single local complementation along a shortest path.
// Returns the moves made and the resulting form of g[attached + {f}].
// Mutates the working graph.
std::pair<std::vector<Move>, TargetForm> connect_vertex(Graph& work,
                                                        const std::vector<Label>& attached,
                                                        const Label& center, const Label& f);

// Decides whether the star graph on `target` is a vertex-minor of g and
// produces a replay-verified plan when it is. Complete for
// distance-hereditary inputs; sound for every input.
SolverVerdict solve_star(const Graph& g, const std::vector<Label>& target,
                         const SolverOptions& opt = {});

}  // namespace vmstar
