#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "vmstar/plan.hpp"

namespace vmstar {

// The orbit of a graph under local complementation, with BFS witnesses.
// Labels are fixed: no isomorphism quotient.
struct LcOrbit {
    std::string canonical_key;            // least adjacency key over the orbit
    std::set<std::string> member_keys;    // every graph in the orbit
    std::vector<Graph> members;
    // LC sequence from the seed to the member with the given key.
    std::map<std::string, std::vector<Label>> witness;
};

// Exhaustive orbit search. Throws SizeCapExceeded when the seed has more
// than `cap` vertices.
LcOrbit lc_orbit(const Graph& seed, int cap = 8);

// True iff g2 lies in the LC orbit of g1 (same vertex set required), with
// the witnessing LC sequence.
std::optional<std::vector<Label>> lc_equivalent(const Graph& g1, const Graph& g2, int cap = 8);

struct OracleOptions {
    long long budget = 20'000'000;      // elimination branches to explore
    int lc_cap = 8;                     // orbit cap for the terminal check
    std::vector<Label> elimination_order;  // defaults to ascending label
};

// Ground-truth vertex-minor decision: explores every way of eliminating
// V(g) \ V(target) with the three measurement rewrites along a fixed order
// and accepts iff some leaf graph is LC-equivalent to the target. A
// returned plan replays on g to exactly the target (always asserted).
std::optional<Plan> vertex_minor_bruteforce(const Graph& g, const Graph& target,
                                            const OracleOptions& opt = {});

}  // namespace vmstar
