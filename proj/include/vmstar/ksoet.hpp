#pragma once

#include <optional>
#include <vector>

#include "vmstar/soet.hpp"

namespace vmstar {

// One way of splitting every marked degree-4 vertex into two degree-2
// halves v^(a), v^(b): for each marked vertex, which two of its four
// incident edge-ends land on the (a) half.
struct SoetSplitting {
    MultiGraph split_graph;
    std::vector<Label> marked;  // ascending
    // Per marked vertex, the labels of the two halves.
    std::vector<std::pair<Label, Label>> halves;
};

// Enumerates the splittings of a 4-regular multigraph with respect to the
// marked set: six labeled end-assignments per vertex, or three for the
// first vertex when `dedup_first` halves the global (a)/(b) symmetry away.
std::vector<SoetSplitting> soet_splittings(const MultiGraph& f, const std::vector<Label>& marked,
                                           bool dedup_first = false);

// Exhaustive edge-disjoint path search: one simple path per terminal pair
// (duplicate pairs allowed), pairwise edge-disjoint. The same edge budget
// guards the whole backtracking; exhausting it throws BudgetExceeded, so a
// nullopt answer is a genuine NO.
std::optional<std::vector<std::vector<int>>> disjoint_paths(
    const MultiGraph& h, const std::vector<std::pair<Label, Label>>& pairs,
    long long budget = 10'000'000);

struct KSoetOptions {
    int max_k = 5;
    long long dpp_budget = 10'000'000;
};

// Fixed-parameter SOET decision: loops splittings and marked orders,
// queries disjoint_paths on the 2k chained pairs, and stitches a found
// path system into a verified SOET witness.
std::optional<SoetWitness> k_soet(const MultiGraph& f, const std::vector<Label>& marked,
                                  const KSoetOptions& opt = {});

}  // namespace vmstar
