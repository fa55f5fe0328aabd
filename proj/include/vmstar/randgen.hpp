#pragma once

#include <random>
#include <vector>

#include "vmstar/graph.hpp"
#include "vmstar/multigraph.hpp"

namespace vmstar {

using Rng = std::mt19937_64;

enum class GrowthOp { Leaf, FalseTwin, TrueTwin };

struct GrowthStep {
    GrowthOp op;
    Label anchor;
    Label added;
};

// Connected distance-hereditary graph on labels 1..n, grown from a single
// vertex by adding leaves and twin-splitting, with the three operations
// chosen by the given probabilities and the anchor chosen uniformly.
Graph random_dh(int n, Rng& rng, double p_leaf = 1.0 / 3, double p_false = 1.0 / 3,
                double p_true = 1.0 / 3, std::vector<GrowthStep>* trace = nullptr);

// Connected simple graph on labels 1..n: a random attachment tree plus each
// remaining pair independently with probability extra_edge_prob.
Graph random_connected(int n, Rng& rng, double extra_edge_prob = 0.25);

// Arbitrary simple graph on labels 1..n with independent edges.
Graph random_graph(int n, Rng& rng, double edge_prob = 0.5);

// Random simple connected cubic graph on labels 1..n (n even, n >= 4),
// via the pairing model with rejection.
Graph random_cubic(int n, Rng& rng);

// Random connected 4-regular multigraph on labels 1..n (loops and
// multi-edges allowed), via the pairing model with rejection on
// connectivity only.
MultiGraph random_four_regular(int n, Rng& rng);

// All connected 4-regular multigraphs on labels 1..n, enumerated as degree
// matrices (loop count per vertex, multiplicity per pair).
std::vector<MultiGraph> all_connected_four_regular(int n);

}  // namespace vmstar
