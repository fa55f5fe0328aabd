#include "vmstar/soet.hpp"

#include <algorithm>
#include <set>

namespace vmstar {

std::optional<SoetWitness> is_soet(const EulerianTour& tour, const std::vector<Label>& marked) {
    std::vector<Label> m(marked);
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());

    std::vector<Label> filtered;
    for (int i = 0; i < tour.length(); ++i) {
        const Label& v = tour.vertex_at(i);
        if (std::binary_search(m.begin(), m.end(), v)) filtered.push_back(v);
    }
    if (filtered.size() != 2 * m.size()) return std::nullopt;
    size_t k = m.size();
    // The induced word is a rotation of ss iff its first half equals its
    // second half; reflection adds nothing (uu reversed is again of the
    // same doubled shape).
    for (size_t i = 0; i < k; ++i)
        if (!(filtered[i] == filtered[i + k])) return std::nullopt;
    SoetWitness w;
    w.tour = tour;
    w.marked = std::move(m);
    w.order.assign(filtered.begin(), filtered.begin() + k);
    return w;
}

std::set<std::pair<Label, Label>> consecutive_pairs(const SoetWitness& w) {
    std::set<std::pair<Label, Label>> out;
    size_t k = w.order.size();
    if (k < 2) return out;
    for (size_t i = 0; i < k; ++i) {
        const Label& a = w.order[i];
        const Label& b = w.order[(i + 1) % k];
        out.insert({std::min(a, b), std::max(a, b)});
    }
    return out;
}

std::vector<MaximalSubword> maximal_subwords(const SoetWitness& w) {
    std::vector<MaximalSubword> out;
    const EulerianTour& t = w.tour;
    int n = t.length();
    std::vector<int> marked_pos;
    for (int i = 0; i < n; ++i)
        if (std::binary_search(w.marked.begin(), w.marked.end(), t.vertex_at(i)))
            marked_pos.push_back(i);
    if (marked_pos.empty()) return out;
    for (size_t j = 0; j < marked_pos.size(); ++j) {
        int p = marked_pos[j];
        int q = marked_pos[(j + 1) % marked_pos.size()];
        MaximalSubword sw;
        sw.before = t.vertex_at(p);
        sw.after = t.vertex_at(q);
        for (int i = p;;) {
            sw.trail.push_back(t.edge_sequence()[i]);
            i = (i + 1) % n;
            if (i == q) break;
            sw.letters.push_back(t.vertex_at(i));
        }
        out.push_back(std::move(sw));
    }
    return out;
}

Label TriangularExpansion::outer(const Label& v, const Label& w) const {
    Label l(v.text() + "^" + w.text());
    auto it = role.find(l);
    if (it == role.end() || it->second != ExpansionRole::Outer)
        throw NotATriangularExpansion("no outer vertex " + l.text());
    return l;
}

Label TriangularExpansion::inner(const Label& v, const Label& w) const {
    Label l(v.text() + "~" + w.text());
    auto it = role.find(l);
    if (it == role.end() || it->second != ExpansionRole::Inner)
        throw NotATriangularExpansion("no inner vertex " + l.text());
    return l;
}

bool TriangularExpansion::has_inner(const Label& v, const Label& w) const {
    return role.count(Label(v.text() + "~" + w.text())) > 0;
}

TriangularExpansion triangular_expansion(const Graph& cubic) {
    for (int i = 0; i < cubic.size(); ++i)
        if (cubic.degree_i(i) != 3)
            throw NotCubic("vertex '" + cubic.label(i).text() + "' has degree " +
                           std::to_string(cubic.degree_i(i)));
    for (const auto& l : cubic.labels())
        if (l.text().find('^') != std::string::npos || l.text().find('~') != std::string::npos)
            throw Error("cubic labels may not contain '^' or '~'");

    TriangularExpansion exp;
    exp.origin = cubic;
    auto reg = [&](const Label& l, ExpansionRole r, const Label& v, const Label& w) {
        exp.role[l] = r;
        exp.owner[l] = {v, w};
    };

    // Vertices and intra-gadget edges; the two least neighbors j, j2 get the
    // inner-path positions and the greatest neighbor sits on the far outer.
    for (const auto& v : cubic.labels()) {
        auto nbs = cubic.neighbors(v);  // ascending
        const Label &j = nbs[0], &j2 = nbs[1], &hat = nbs[2];
        Label t1(v.text() + "~" + j.text()), t2(v.text() + "~" + j2.text());
        Label o1(v.text() + "^" + j.text()), o2(v.text() + "^" + j2.text()),
            o3(v.text() + "^" + hat.text());
        reg(v, ExpansionRole::Original, v, v);
        reg(t1, ExpansionRole::Inner, v, j);
        reg(t2, ExpansionRole::Inner, v, j2);
        reg(o1, ExpansionRole::Outer, v, j);
        reg(o2, ExpansionRole::Outer, v, j2);
        reg(o3, ExpansionRole::Outer, v, hat);
        auto& g = exp.multigraph;
        g.add_edge(v, t1);
        g.add_edge(v, t2);
        g.add_edge(t1, t2);
        g.add_edge(v, o1);
        g.add_edge(v, o2);
        g.add_edge(o1, t1);
        g.add_edge(o2, t2);
        g.add_edge(o3, t1);
        g.add_edge(o3, t2);
    }
    // Doubled inter-gadget edges.
    for (const auto& [u, w] : cubic.edges()) {
        Label a(u.text() + "^" + w.text()), b(w.text() + "^" + u.text());
        exp.multigraph.add_edge(a, b);
        exp.multigraph.add_edge(a, b);
    }
    return exp;
}

std::vector<SkipReport> detect_skips(const TriangularExpansion& exp, const SoetWitness& w) {
    if (w.marked != exp.origin.labels())
        throw NotATriangularExpansion("witness marked set is not the original vertex set");
    auto subs = maximal_subwords(w);
    std::vector<SkipReport> out;
    auto gadget_of = [&](const Label& l) -> Label {
        auto it = exp.owner.find(l);
        if (it == exp.owner.end()) throw NotATriangularExpansion("unknown vertex " + l.text());
        return it->second.first;
    };
    for (size_t m = 0; m < subs.size(); ++m) {
        const auto& sub = subs[m];
        const auto& ls = sub.letters;
        size_t i = 0;
        while (i < ls.size()) {
            Label g = gadget_of(ls[i]);
            size_t j = i;
            while (j + 1 < ls.size() && gadget_of(ls[j + 1]) == g) ++j;
            if (!(g == sub.before) && !(g == sub.after)) {
                Label enter = i == 0 ? sub.before : gadget_of(ls[i - 1]);
                Label exit = j + 1 == ls.size() ? sub.after : gadget_of(ls[j + 1]);
                out.push_back(SkipReport{g, enter, exit, !(enter == exit), int(m)});
            }
            i = j + 1;
        }
    }
    return out;
}

std::optional<std::vector<Label>> hamiltonian_cycle(const Graph& g) {
    int n = g.size();
    if (n == 0) return std::nullopt;
    std::vector<int> path{0};
    std::vector<bool> used(n, false);
    used[0] = true;

    std::function<bool()> extend = [&]() -> bool {
        if (int(path.size()) == n) return g.adjacent_i(path.back(), 0);
        bool ok = false;
        g.row(path.back()).for_each([&](int nb) {
            if (ok || used[nb]) return;
            used[nb] = true;
            path.push_back(nb);
            if (extend())
                ok = true;
            else {
                path.pop_back();
                used[nb] = false;
            }
        });
        return ok;
    };
    if (!extend()) return std::nullopt;
    std::vector<Label> cycle;
    for (int i : path) cycle.push_back(g.label(i));
    return cycle;
}

namespace {

// Appends the edge between consecutive gadget-trail vertices, choosing the
// lowest unused id between the pair.
struct TourBuilder {
    const MultiGraph& g;
    std::set<int> used;
    std::vector<int> seq;
    Label at;

    explicit TourBuilder(const MultiGraph& g_, Label start) : g(g_), at(std::move(start)) {}

    void step_to(const Label& next) {
        for (int id : g.incident_ids(at)) {
            const auto& e = g.edge(id);
            bool matches = (e.u == at && e.v == next) || (e.v == at && e.u == next);
            if (matches && !used.count(id)) {
                used.insert(id);
                seq.push_back(id);
                at = next;
                return;
            }
        }
        throw Error("internal: no unused edge from '" + at.text() + "' to '" + next.text() + "'");
    }
};

}  // namespace

SoetWitness soet_from_hamiltonian(const TriangularExpansion& exp,
                                  const std::vector<Label>& cycle) {
    const Graph& r = exp.origin;
    int k = int(cycle.size());
    if (k != r.size()) throw NotHamiltonianCycle("cycle does not cover every vertex");
    {
        std::set<Label> seen(cycle.begin(), cycle.end());
        if (int(seen.size()) != k) throw NotHamiltonianCycle("cycle repeats a vertex");
        for (int i = 0; i < k; ++i)
            if (!r.adjacent(cycle[i], cycle[(i + 1) % k]))
                throw NotHamiltonianCycle("consecutive cycle vertices are not adjacent");
    }

    // Per-gadget trail pair from the entry outer (toward the predecessor)
    // to the exit outer (toward the successor), each passing the original
    // vertex once and jointly covering all nine intra-gadget edges.
    auto gadget_trails = [&](const Label& v, const Label& prev, const Label& next)
        -> std::pair<std::vector<Label>, std::vector<Label>> {
        Label hat;
        for (const auto& nb : r.neighbors(v))
            if (!(nb == prev) && !(nb == next)) hat = nb;
        bool prev_in = exp.has_inner(v, prev);
        bool next_in = exp.has_inner(v, next);
        Label op = exp.outer(v, prev), on = exp.outer(v, next), oh = exp.outer(v, hat);
        if (prev_in && next_in) {
            Label tp = exp.inner(v, prev), tn = exp.inner(v, next);
            return {{op, tp, oh, tn, v, on}, {op, v, tp, tn, on}};
        }
        if (prev_in) {  // hat has the other inner slot
            Label tp = exp.inner(v, prev), th = exp.inner(v, hat);
            return {{op, tp, v, th, on}, {op, v, oh, th, tp, on}};
        }
        // next and hat have the inner slots
        Label tn = exp.inner(v, next), th = exp.inner(v, hat);
        return {{op, th, v, tn, on}, {op, tn, th, oh, v, on}};
    };

    Label start = exp.outer(cycle[0], cycle[k - 1]);
    TourBuilder b(exp.multigraph, start);
    for (int pass = 0; pass < 2; ++pass) {
        for (int i = 0; i < k; ++i) {
            const Label& v = cycle[i];
            const Label& prev = cycle[(i + k - 1) % k];
            const Label& next = cycle[(i + 1) % k];
            auto [first, second] = gadget_trails(v, prev, next);
            const auto& trail = pass == 0 ? first : second;
            for (size_t t = 1; t < trail.size(); ++t) b.step_to(trail[t]);
            b.step_to(exp.outer(next, v));  // inter-gadget crossing
        }
    }

    // Detours over the doubled copies of the cycle-unused edges of R make
    // the tour Eulerian. Each detour is anchored at an occurrence of u^(w).
    std::vector<int> seq = std::move(b.seq);
    for (const auto& [u, w] : r.edges()) {
        bool on_cycle = false;
        for (int i = 0; i < k; ++i) {
            const Label &a = cycle[i], &bl = cycle[(i + 1) % k];
            if ((a == u && bl == w) || (a == w && bl == u)) on_cycle = true;
        }
        if (on_cycle) continue;
        Label uw = exp.outer(u, w), wu = exp.outer(w, u);
        std::vector<int> pair_ids;
        for (int id : exp.multigraph.incident_ids(uw)) {
            const auto& e = exp.multigraph.edge(id);
            if ((e.u == uw && e.v == wu) || (e.u == wu && e.v == uw)) pair_ids.push_back(id);
        }
        if (pair_ids.size() != 2) throw Error("internal: expected a doubled inter-gadget edge");
        // Walk the tour to find an arrival at uw.
        Label at = start;
        size_t pos = 0;
        bool placed = false;
        for (; pos <= seq.size(); ++pos) {
            if (at == uw) {
                seq.insert(seq.begin() + pos, pair_ids.begin(), pair_ids.end());
                placed = true;
                break;
            }
            if (pos < seq.size()) at = exp.multigraph.other_end(seq[pos], at);
        }
        if (!placed) throw Error("internal: detour anchor not on tour");
    }

    EulerianTour tour(exp.multigraph, start, std::move(seq));
    auto witness = is_soet(tour, r.labels());
    if (!witness) throw Error("internal: constructed tour is not a SOET");
    return *witness;
}

bool is_hamsoet(const TriangularExpansion& exp, const SoetWitness& w) {
    for (const auto& [a, b] : consecutive_pairs(w))
        if (!exp.origin.adjacent(a, b)) return false;
    return true;
}

namespace {

int count_bad_pairs(const TriangularExpansion& exp, const SoetWitness& w) {
    int bad = 0;
    for (const auto& [a, b] : consecutive_pairs(w))
        if (!exp.origin.adjacent(a, b)) ++bad;
    return bad;
}

}  // namespace

SoetWitness hamsoet_normalize(const TriangularExpansion& exp, SoetWitness w) {
    int guard = 2 * int(w.marked.size()) + 2;
    while (!is_hamsoet(exp, w)) {
        if (--guard < 0) throw MalformedWitness("11-skip repair did not converge");

        std::optional<std::pair<Label, Label>> bad;
        for (const auto& pr : consecutive_pairs(w))
            if (!exp.origin.adjacent(pr.first, pr.second)) {
                bad = pr;
                break;
            }
        auto [u, v] = *bad;

        // The two maximal sub-words associated to (u,v) each make exactly
        // one true skip; those triangles name the repair vertices.
        auto subs = maximal_subwords(w);
        auto skips = detect_skips(exp, w);
        std::vector<Label> skip_triangles;
        for (const auto& rep : skips) {
            if (!rep.true_skip) continue;
            const auto& sub = subs[rep.subword_index];
            bool assoc_uv = (sub.before == u && sub.after == v) || (sub.before == v && sub.after == u);
            if (assoc_uv) skip_triangles.push_back(rep.triangle);
        }
        if (skip_triangles.size() != 2)
            throw MalformedWitness("non-adjacent consecutive pair without a valid 11-skip");
        Label s1 = skip_triangles[0], s2 = skip_triangles[1];

        int before = count_bad_pairs(exp, w);
        bool repaired = false;
        for (const auto& [p, q] : std::vector<std::pair<Label, Label>>{{u, v}, {v, u}}) {
            for (const auto& [t1, t2] : std::vector<std::pair<Label, Label>>{{s1, s2}, {s2, s1}}) {
                if (!exp.origin.adjacent(q, t1) || !exp.origin.adjacent(t2, p) ||
                    !exp.origin.adjacent(t1, p) || !exp.origin.adjacent(q, t2))
                    continue;
                for (int form = 0; form < 2; ++form) {
                    Label x = form == 0 ? exp.outer(q, t1) : exp.outer(t1, p);
                    Label y = form == 0 ? exp.outer(t2, p) : exp.outer(q, t2);
                    EulerianTour cand = w.tour.kappa(x).kappa(y);
                    auto sw = is_soet(cand, w.marked);
                    if (!sw) continue;
                    auto pairs = consecutive_pairs(*sw);
                    if (pairs.count({std::min(u, v), std::max(u, v)})) continue;
                    if (count_bad_pairs(exp, *sw) >= before) continue;
                    w = *sw;
                    repaired = true;
                    break;
                }
                if (repaired) break;
            }
            if (repaired) break;
        }
        if (!repaired) throw MalformedWitness("11-skip did not match a repairable pattern");
    }
    return w;
}

std::vector<Label> hamiltonian_from_hamsoet(const TriangularExpansion& exp, const SoetWitness& w) {
    if (!is_hamsoet(exp, w))
        throw MalformedWitness("witness has consecutive vertices that are not adjacent");
    if (w.order.size() != size_t(exp.origin.size()))
        throw MalformedWitness("witness order does not cover the cubic graph");
    return w.order;
}

std::pair<Graph, std::vector<Label>> reduce_cubham_to_starvm(const Graph& cubic) {
    TriangularExpansion exp = triangular_expansion(cubic);
    EulerianTour tour = eulerian_tour(exp.multigraph);
    Graph g = tour.induced_word().alternance_graph();
    return {std::move(g), cubic.labels()};
}

std::optional<SoetWitness> find_soet_by_enumeration(const MultiGraph& f,
                                                    const std::vector<Label>& marked,
                                                    long long budget) {
    std::optional<SoetWitness> found;
    enumerate_eulerian_tours(
        f, f.vertices().front(),
        [&](const EulerianTour& t) {
            auto w = is_soet(t, marked);
            if (w) {
                found = *w;
                return false;
            }
            return true;
        },
        budget);
    return found;
}

}  // namespace vmstar
