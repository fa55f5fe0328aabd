#include "vmstar/dh.hpp"

#include <algorithm>
#include <map>

namespace vmstar {

bool are_twins(const Graph& g, const Label& u, const Label& v) {
    int ui = g.index_of(u), vi = g.index_of(v);
    if (ui == vi) return false;
    Bitset ru = g.row(ui), rv = g.row(vi);
    ru.clear(vi);
    rv.clear(ui);
    return ru == rv;
}

namespace {

// Buckets vertices whose rows coincide (false twins) and whose closed rows
// coincide (true twins). Every bucket of size >= 2 is a set of pairwise
// twins.
std::map<Label, std::vector<Label>> twin_map(const Graph& g) {
    std::map<Label, std::vector<Label>> twins;
    int n = g.size();
    std::map<std::vector<uint64_t>, std::vector<int>> open_buckets, closed_buckets;
    for (int i = 0; i < n; ++i) {
        open_buckets[g.row(i).words()].push_back(i);
        Bitset closed = g.row(i);
        closed.set(i);
        closed_buckets[closed.words()].push_back(i);
    }
    auto record = [&](const std::vector<int>& bucket) {
        if (bucket.size() < 2) return;
        for (int i : bucket)
            for (int j : bucket)
                if (i != j) twins[g.label(i)].push_back(g.label(j));
    };
    for (const auto& [k, b] : open_buckets) record(b);
    for (const auto& [k, b] : closed_buckets) record(b);
    for (auto& [v, partners] : twins) {
        std::sort(partners.begin(), partners.end());
        partners.erase(std::unique(partners.begin(), partners.end()), partners.end());
    }
    return twins;
}

}  // namespace

FoliageReport foliage(const Graph& g) {
    FoliageReport r;
    for (int i = 0; i < g.size(); ++i) {
        if (g.degree_i(i) == 1) {
            r.leaves.insert(g.label(i));
            r.axils.insert(g.label(g.row(i).lowest()));
        }
    }
    r.twins = twin_map(g);
    r.foliage = r.leaves;
    r.foliage.insert(r.axils.begin(), r.axils.end());
    for (const auto& [v, partners] : r.twins) r.foliage.insert(v);
    return r;
}

std::optional<RemovableVertex> find_removable(const Graph& g, const std::set<Label>& protect) {
    std::optional<RemovableVertex> best;
    auto consider = [&](const RemovableVertex& cand) {
        if (protect.count(cand.v)) return;
        if (!best || cand.v < best->v) best = cand;
    };
    for (int i = 0; i < g.size(); ++i)
        if (g.degree_i(i) == 1) consider({g.label(i), true, g.label(g.row(i).lowest())});
    for (const auto& [v, partners] : twin_map(g)) consider({v, false, partners.front()});
    return best;
}

bool is_distance_hereditary(const Graph& g) {
    for (const auto& comp : g.connected_components()) {
        Graph h = g.induced(comp);
        while (h.size() > 1) {
            auto rem = find_removable(h, {});
            if (!rem) return false;
            h = h.erased(rem->v);
        }
    }
    return true;
}

std::pair<Graph, std::vector<Move>> reduce_instance(const Graph& g, const std::set<Label>& keep) {
    for (const auto& k : keep)
        if (!g.has_vertex(k)) throw UnknownVertex("keep vertex '" + k.text() + "' not in graph");
    Graph h = g;
    std::vector<Move> prefix;
    for (;;) {
        // Least-label removable foliage vertex outside keep: a leaf or twin
        // is deleted directly; an axil is first turned into a leaf by
        // tau_axil then tau_leaf.
        auto direct = find_removable(h, keep);
        std::optional<Label> axil;
        {
            FoliageReport f = foliage(h);
            for (const auto& a : f.axils) {
                if (keep.count(a) || f.leaves.count(a) || f.is_twin(a)) continue;
                if (!axil || a < *axil) axil = a;
            }
        }
        if (direct && (!axil || direct->v < *axil)) {
            h = h.erased(direct->v);
            continue;
        }
        if (axil) {
            // least-label leaf hanging off the axil
            std::optional<Label> leaf;
            for (const auto& u : h.neighbors(*axil))
                if (h.degree(u) == 1 && (!leaf || u < *leaf)) leaf = u;
            h = h.local_complement(*axil).local_complement(*leaf);
            prefix.push_back(Move::lc(*axil));
            prefix.push_back(Move::lc(*leaf));
            h = h.erased(*axil);
            continue;
        }
        break;
    }
    return {h, prefix};
}

}  // namespace vmstar
