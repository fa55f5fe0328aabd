#include "vmstar/oracle.hpp"

#include <algorithm>
#include <deque>

namespace vmstar {

LcOrbit lc_orbit(const Graph& seed, int cap) {
    if (seed.size() > cap)
        throw SizeCapExceeded("orbit search refused: " + std::to_string(seed.size()) +
                              " vertices exceeds cap " + std::to_string(cap));
    LcOrbit orbit;
    std::string seed_key = seed.adjacency_key();
    orbit.canonical_key = seed_key;
    orbit.member_keys.insert(seed_key);
    orbit.members.push_back(seed);
    orbit.witness[seed_key] = {};
    std::deque<Graph> frontier{seed};
    while (!frontier.empty()) {
        Graph g = std::move(frontier.front());
        frontier.pop_front();
        std::vector<Label> base = orbit.witness.at(g.adjacency_key());
        for (int v = 0; v < g.size(); ++v) {
            if (g.degree_i(v) == 0) continue;  // isolated vertices are fixed points
            Graph h = g;
            h.local_complement_inplace_i(v);
            std::string key = h.adjacency_key();
            if (!orbit.member_keys.insert(key).second) continue;
            if (key < orbit.canonical_key) orbit.canonical_key = key;
            std::vector<Label> w = base;
            w.push_back(g.label(v));
            orbit.witness[key] = std::move(w);
            orbit.members.push_back(h);
            frontier.push_back(std::move(h));
        }
    }
    return orbit;
}

std::optional<std::vector<Label>> lc_equivalent(const Graph& g1, const Graph& g2, int cap) {
    if (g1.labels() != g2.labels())
        throw InvalidTarget("LC-equivalence needs identical vertex sets");
    LcOrbit orbit = lc_orbit(g1, cap);
    auto it = orbit.witness.find(g2.adjacency_key());
    if (it == orbit.witness.end()) return std::nullopt;
    return it->second;
}

namespace {

struct BruteSearch {
    const Graph& target;
    const std::set<std::string>& target_orbit_keys;
    std::vector<Label> order;
    long long budget;
    long long used = 0;

    // Chosen measurements, parallel to `order`.
    std::vector<Move> chosen;
    std::optional<std::vector<Move>> found;

    void search(const Graph& g, size_t depth) {
        if (found) return;
        if (depth == order.size()) {
            if (++used > budget) throw BudgetExceeded("vertex-minor branch budget exhausted");
            Graph restricted = g.induced(target.labels());
            if (target_orbit_keys.count(restricted.adjacency_key())) found = chosen;
            return;
        }
        const Label& v = order[depth];
        for (Basis b : {Basis::Z, Basis::Y, Basis::X}) {
            std::optional<Label> partner;
            if (b == Basis::X && g.degree(v) > 0) {
                int vi = g.index_of(v);
                partner = g.label(g.row(vi).lowest());
            }
            Graph h = measure(g, b, v, partner);
            Move m = b == Basis::Z ? Move::mz(v) : (b == Basis::Y ? Move::my(v) : Move::mx(v, partner));
            chosen.push_back(m);
            search(h, depth + 1);
            chosen.pop_back();
            if (found) return;
            // On an isolated vertex all three bases reduce to deletion.
            if (g.degree(v) == 0) break;
        }
    }
};

}  // namespace

std::optional<Plan> vertex_minor_bruteforce(const Graph& g, const Graph& target,
                                            const OracleOptions& opt) {
    for (const auto& t : target.labels())
        if (!g.has_vertex(t))
            throw InvalidTarget("target vertex '" + t.text() + "' is not in the source graph");

    std::vector<Label> order = opt.elimination_order;
    if (order.empty()) {
        for (const auto& l : g.labels())
            if (!target.has_vertex(l)) order.push_back(l);
    } else {
        std::vector<Label> expect;
        for (const auto& l : g.labels())
            if (!target.has_vertex(l)) expect.push_back(l);
        std::vector<Label> sorted_order = order;
        std::sort(sorted_order.begin(), sorted_order.end());
        if (sorted_order != expect)
            throw InvalidTarget("elimination order must cover V(g) \\ V(target) exactly once each");
    }

    LcOrbit target_orbit = lc_orbit(target, std::max(opt.lc_cap, target.size()));
    BruteSearch s{target, target_orbit.member_keys, order, opt.budget, 0, {}, std::nullopt};
    s.search(g, 0);
    if (!s.found) return std::nullopt;

    Plan plan;
    plan.moves = *s.found;
    plan.source_vertices = g.labels();
    plan.target_vertices = target.labels();

    // Append the terminal LC witness so the replay lands exactly on target.
    Graph leaf = g;
    for (const auto& m : plan.moves) leaf = apply_move(leaf, m);
    Graph restricted = leaf.induced(target.labels());
    auto lc = lc_equivalent(restricted, target, std::max(opt.lc_cap, target.size()));
    if (!lc) throw Error("internal: accepted leaf lost LC-equivalence");
    for (const auto& v : *lc) plan.moves.push_back(Move::lc(v));

    // Self-consistency: the emitted plan must replay to the exact target.
    Graph replay = apply_plan(g, plan);
    if (!(replay == target)) throw Error("internal: witness replay mismatch");
    return plan;
}

}  // namespace vmstar
