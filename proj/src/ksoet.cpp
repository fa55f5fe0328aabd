#include "vmstar/ksoet.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace vmstar {

namespace {

// An edge end: (edge id, side); side 0 is the edge's u, side 1 its v. A
// self-loop contributes both ends at the same vertex.
struct End {
    int id;
    int side;
};

std::vector<End> ends_at(const MultiGraph& f, const Label& v) {
    std::vector<End> out;
    for (const auto& e : f.edges()) {
        if (e.u == v) out.push_back({e.id, 0});
        if (e.v == v) out.push_back({e.id, 1});
    }
    return out;
}

}  // namespace

std::vector<SoetSplitting> soet_splittings(const MultiGraph& f, const std::vector<Label>& marked,
                                           bool dedup_first) {
    if (!f.is_regular(4)) throw NotFourRegular("splittings need a 4-regular multigraph");
    std::vector<Label> m(marked);
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());
    for (const auto& v : m)
        if (std::find(f.vertices().begin(), f.vertices().end(), v) == f.vertices().end())
            throw UnknownVertex("marked vertex '" + v.text() + "' not in multigraph");

    // The six ways to put two of four ends on the (a) half, as index pairs.
    static const int choices[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

    std::vector<std::vector<End>> ends;
    for (const auto& v : m) ends.push_back(ends_at(f, v));

    std::vector<SoetSplitting> out;
    std::vector<int> pick(m.size(), 0);
    for (;;) {
        SoetSplitting s;
        s.marked = m;
        // end -> half assignment for this pick
        std::map<std::pair<int, int>, Label> remap;
        for (size_t i = 0; i < m.size(); ++i) {
            Label a(m[i].text() + "@a"), b(m[i].text() + "@b");
            s.halves.push_back({a, b});
            const auto& c = choices[pick[i]];
            for (int j = 0; j < 4; ++j) {
                const End& e = ends[i][j];
                bool on_a = j == c[0] || j == c[1];
                remap[{e.id, e.side}] = on_a ? a : b;
            }
        }
        auto mapped = [&](int id, int side, const Label& orig) -> Label {
            auto it = remap.find({id, side});
            return it == remap.end() ? orig : it->second;
        };
        for (const auto& v : f.vertices())
            if (!std::binary_search(m.begin(), m.end(), v)) s.split_graph.add_vertex(v);
        for (const auto& [a, b] : s.halves) {
            s.split_graph.add_vertex(a);
            s.split_graph.add_vertex(b);
        }
        for (const auto& e : f.edges())
            s.split_graph.add_edge(e.id, mapped(e.id, 0, e.u), mapped(e.id, 1, e.v));
        out.push_back(std::move(s));

        // next assignment vector
        int i = int(m.size()) - 1;
        for (; i >= 0; --i) {
            int cap = (dedup_first && i == 0) ? 3 : 6;
            if (++pick[i] < cap) break;
            pick[i] = 0;
        }
        if (i < 0) break;
        if (m.empty()) break;  // single empty-assignment splitting
    }
    return out;
}

namespace {

struct DppSearch {
    const MultiGraph& h;
    const std::vector<std::pair<Label, Label>>& pairs;
    long long budget;
    std::set<int> used_edges;
    std::vector<std::vector<int>> paths;
    std::map<Label, std::vector<int>> incident;

    DppSearch(const MultiGraph& h_, const std::vector<std::pair<Label, Label>>& p_, long long b)
        : h(h_), pairs(p_), budget(b) {
        for (const auto& v : h.vertices()) incident[v] = h.incident_ids(v);
    }

    bool solve(size_t p) {
        if (p == pairs.size()) return true;
        std::set<Label> visited{pairs[p].first};
        std::vector<int> path;
        return extend(p, pairs[p].first, visited, path);
    }

    bool extend(size_t p, const Label& at, std::set<Label>& visited, std::vector<int>& path) {
        if (--budget < 0) throw BudgetExceeded("disjoint-path search budget exhausted");
        if (at == pairs[p].second && !path.empty()) {
            paths.push_back(path);
            if (solve(p + 1)) return true;
            paths.pop_back();
            // fall through: maybe a longer path for this pair unblocks later pairs
        }
        if (at == pairs[p].second && path.empty() && pairs[p].first == pairs[p].second) {
            paths.push_back(path);
            if (solve(p + 1)) return true;
            paths.pop_back();
        }
        for (int id : incident[at]) {
            if (used_edges.count(id)) continue;
            const Label& nxt = h.other_end(id, at);
            if (visited.count(nxt)) continue;
            visited.insert(nxt);
            used_edges.insert(id);
            path.push_back(id);
            if (extend(p, nxt, visited, path)) return true;
            path.pop_back();
            used_edges.erase(id);
            visited.erase(nxt);
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<std::vector<int>>> disjoint_paths(
    const MultiGraph& h, const std::vector<std::pair<Label, Label>>& pairs, long long budget) {
    for (const auto& [a, b] : pairs) {
        h.incident_ids(a);  // throws nothing; presence check below
        if (std::find(h.vertices().begin(), h.vertices().end(), a) == h.vertices().end() ||
            std::find(h.vertices().begin(), h.vertices().end(), b) == h.vertices().end())
            throw UnknownVertex("terminal not in multigraph");
    }
    DppSearch s(h, pairs, budget);
    if (s.solve(0)) return s.paths;
    return std::nullopt;
}

namespace {

// Closed walk over exactly the `remaining` edges from `from` (Hierholzer).
std::vector<int> subtour_over(const MultiGraph& f, std::set<int>& remaining, const Label& from) {
    std::vector<std::pair<Label, int>> stack{{from, -1}};
    std::vector<int> circuit;
    while (!stack.empty()) {
        Label v = stack.back().first;
        int take = -1;
        for (int id : f.incident_ids(v))
            if (remaining.count(id)) {
                take = id;
                break;
            }
        if (take >= 0) {
            remaining.erase(take);
            stack.push_back({f.other_end(take, v), take});
        } else {
            if (stack.back().second >= 0) circuit.push_back(stack.back().second);
            stack.pop_back();
        }
    }
    std::reverse(circuit.begin(), circuit.end());
    return circuit;
}

}  // namespace

std::optional<SoetWitness> k_soet(const MultiGraph& f, const std::vector<Label>& marked,
                                  const KSoetOptions& opt) {
    if (!f.is_regular(4)) throw NotFourRegular("k-SOET needs a 4-regular multigraph");
    if (!f.is_connected()) throw NotConnected("k-SOET needs a connected multigraph");
    std::vector<Label> m(marked);
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());
    int k = int(m.size());
    if (k > opt.max_k)
        throw BudgetExceeded("marked set of size " + std::to_string(k) + " exceeds the cap of " +
                             std::to_string(opt.max_k));
    for (const auto& v : m)
        if (std::find(f.vertices().begin(), f.vertices().end(), v) == f.vertices().end())
            throw UnknownVertex("marked vertex '" + v.text() + "' not in multigraph");

    // Any Eulerian tour visits each vertex twice, so tiny marked sets are
    // always witnessed.
    if (k <= 1) {
        auto w = is_soet(eulerian_tour(f), m);
        if (!w) throw Error("internal: trivial SOET check failed");
        return w;
    }

    auto splittings = soet_splittings(f, m, /*dedup_first=*/true);

    // Orders: first element fixed (rotation symmetry), reversal halved.
    std::vector<std::vector<Label>> orders;
    std::vector<Label> rest(m.begin() + 1, m.end());
    std::sort(rest.begin(), rest.end());
    do {
        if (k >= 3 && rest.back() < rest.front()) continue;  // reversal dedup
        std::vector<Label> order{m[0]};
        order.insert(order.end(), rest.begin(), rest.end());
        orders.push_back(order);
    } while (std::next_permutation(rest.begin(), rest.end()));

    bool budget_hit = false;
    for (const auto& split : splittings) {
        std::map<Label, std::pair<Label, Label>> half;
        for (size_t i = 0; i < split.marked.size(); ++i) half[split.marked[i]] = split.halves[i];
        for (const auto& order : orders) {
            std::vector<std::pair<Label, Label>> pairs;
            for (int i = 0; i < k; ++i)
                pairs.push_back({half[order[i]].first, half[order[(i + 1) % k]].first});
            for (int i = 0; i < k; ++i)
                pairs.push_back({half[order[i]].second, half[order[(i + 1) % k]].second});
            std::optional<std::vector<std::vector<int>>> sol;
            try {
                sol = disjoint_paths(split.split_graph, pairs, opt.dpp_budget);
            } catch (const BudgetExceeded&) {
                budget_hit = true;
                continue;
            }
            if (!sol) continue;

            // Stitch: the (a) chain then the (b) chain form a closed trail
            // through the marked set twice in order; leftover edges splice
            // in as Eulerian sub-tours.
            std::vector<int> seq;
            for (const auto& p : *sol) seq.insert(seq.end(), p.begin(), p.end());
            std::set<int> remaining;
            for (const auto& e : f.edges()) remaining.insert(e.id);
            for (int id : seq) remaining.erase(id);
            while (!remaining.empty()) {
                Label at = order[0];
                bool spliced = false;
                for (size_t pos = 0; pos <= seq.size() && !spliced; ++pos) {
                    bool has_free = false;
                    for (int id : f.incident_ids(at))
                        if (remaining.count(id)) has_free = true;
                    if (has_free) {
                        std::vector<int> sub = subtour_over(f, remaining, at);
                        seq.insert(seq.begin() + pos, sub.begin(), sub.end());
                        spliced = true;
                        break;
                    }
                    if (pos < seq.size()) at = f.other_end(seq[pos], at);
                }
                if (!spliced) throw Error("internal: leftover edges detached from the tour");
            }
            EulerianTour tour(f, order[0], std::move(seq));
            auto w = is_soet(tour, m);
            if (!w) throw Error("internal: stitched tour lost the SOET property");
            return w;
        }
    }
    if (budget_hit) throw BudgetExceeded("k-SOET search ran out of path budget");
    return std::nullopt;
}

}  // namespace vmstar
