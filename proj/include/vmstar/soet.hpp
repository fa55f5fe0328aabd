#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "vmstar/multigraph.hpp"

namespace vmstar {

// A semi-ordered Eulerian tour: the induced word on the marked set is some
// order repeated twice, m(U)[V'] = s s.
struct SoetWitness {
    EulerianTour tour;
    std::vector<Label> marked;  // V', ascending
    std::vector<Label> order;   // s: each marked vertex once, in tour order
};

// Checks whether the tour is a SOET with respect to marked (rotations and
// reflection of the tour are equivalent, so the check is on the class).
std::optional<SoetWitness> is_soet(const EulerianTour& tour, const std::vector<Label>& marked);

// Unordered consecutive pairs (s_i, s_i+1) of the witness order, cyclically.
std::set<std::pair<Label, Label>> consecutive_pairs(const SoetWitness& w);

// One maximal sub-word per gap between cyclically consecutive marked visits
// in m(U); the wrap-around gap is the concatenation through the tour start.
struct MaximalSubword {
    Label before, after;         // the marked visits bounding the gap
    std::vector<Label> letters;  // unmarked letters between them
    std::vector<int> trail;      // edge ids of the gap's sub-trail
};
std::vector<MaximalSubword> maximal_subwords(const SoetWitness& w);

// --- triangular expansions of cubic graphs ---

enum class ExpansionRole { Original, Outer, Inner };

struct TriangularExpansion {
    MultiGraph multigraph;
    Graph origin;  // the cubic graph R
    // role and (owner, other) for every vertex of the expansion; for the
    // original vertices other == owner.
    std::map<Label, ExpansionRole> role;
    std::map<Label, std::pair<Label, Label>> owner;  // label -> (v, w) for v^(w)

    Label outer(const Label& v, const Label& w) const;  // v^(w)
    Label inner(const Label& v, const Label& w) const;  // v~(w); only the two least neighbors
    bool has_inner(const Label& v, const Label& w) const;
};

// Replaces every cubic vertex by the 6-vertex triangle gadget and doubles
// all inter-gadget edges, giving a 4-regular multigraph on 6n vertices with
// 2m + 9n edges. The gadget orientation is deterministic: the two least
// neighbors get the inner-path positions.
TriangularExpansion triangular_expansion(const Graph& cubic);

// --- skips ---

struct SkipReport {
    Label triangle;              // w: the gadget skipped
    Label enter_from, exit_to;   // x1, x2 with the crossings x_i^(w) w^(x_i)
    bool true_skip;              // x1 != x2
    int subword_index;           // which maximal sub-word makes the skip
};

// Gadget passages avoiding the original vertex, per maximal sub-word. A
// sub-word never skips the gadgets of its own associated pair, so a
// detour that leaves a gadget and returns right before the original
// vertex is not a skip of that gadget; every gadget is skipped at most
// once in the tours this suite constructs.
std::vector<SkipReport> detect_skips(const TriangularExpansion& exp, const SoetWitness& w);

// --- Hamiltonian cycles and HAMSOETs ---

// Exhaustive search; the cycle starts at the least vertex.
std::optional<std::vector<Label>> hamiltonian_cycle(const Graph& g);

// Builds a SOET on the expansion from a Hamiltonian cycle of the cubic
// graph: per-gadget trail pairs concatenated into a double traversal, then
// detours over the unused doubled edges complete the Eulerian tour.
SoetWitness soet_from_hamiltonian(const TriangularExpansion& exp,
                                  const std::vector<Label>& cycle);

// True iff every consecutive pair of the witness is an edge of the cubic
// graph (the HAMSOET property).
bool is_hamsoet(const TriangularExpansion& exp, const SoetWitness& w);

// Repairs every valid 11-skip with two kappa transformations until the
// witness is a HAMSOET. Throws MalformedWitness when a non-adjacent
// consecutive pair does not match the two repairable patterns.
SoetWitness hamsoet_normalize(const TriangularExpansion& exp, SoetWitness w);

// Reads the Hamiltonian cycle off a HAMSOET.
std::vector<Label> hamiltonian_from_hamsoet(const TriangularExpansion& exp, const SoetWitness& w);

// The reduction: a circle graph G = A(U) on the expansion's 6n vertices and
// the original vertex set as the star target; (G, V(R)) is a yes-instance
// exactly when the cubic graph is Hamiltonian.
std::pair<Graph, std::vector<Label>> reduce_cubham_to_starvm(const Graph& cubic);

// Test-oracle style exhaustive SOET decision by tour enumeration.
std::optional<SoetWitness> find_soet_by_enumeration(const MultiGraph& f,
                                                    const std::vector<Label>& marked,
                                                    long long budget = 2'000'000);

}  // namespace vmstar
