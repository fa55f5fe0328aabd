#pragma once

#include <map>
#include <set>
#include <vector>

#include "vmstar/plan.hpp"

namespace vmstar {

struct FoliageReport {
    std::set<Label> leaves;
    std::set<Label> axils;
    std::map<Label, std::vector<Label>> twins;  // vertex -> twin partners
    std::set<Label> foliage;                    // leaves + axils + twin keys

    bool is_twin(const Label& v) const { return twins.count(v) > 0; }
};

// Exact classification of leaves, axils and twins by definition.
FoliageReport foliage(const Graph& g);

// True iff u,v form a twin pair, i.e. N_u \ {v} == N_v \ {u}. True twins
// are additionally adjacent.
bool are_twins(const Graph& g, const Label& u, const Label& v);

// Connected graphs: reducible to a single vertex by repeatedly deleting a
// leaf or one member of a twin pair. Disconnected graphs are checked
// componentwise.
bool is_distance_hereditary(const Graph& g);

// Removes vertices outside `keep` that are leaves, twins or axils,
// recording the LC prefix for the axil case (tau_v then tau_leaf before the
// deletion). The reduced graph has the same vertex-minors on `keep`.
std::pair<Graph, std::vector<Move>> reduce_instance(const Graph& g,
                                                    const std::set<Label>& keep);

// Least-label vertex outside `protect` that is a leaf or has a twin
// partner, if any. Used by the recognizer and the reduction loop.
struct RemovableVertex {
    Label v;
    bool leaf;
    Label partner;  // axil for a leaf, twin partner otherwise
};
std::optional<RemovableVertex> find_removable(const Graph& g, const std::set<Label>& protect);

}  // namespace vmstar
