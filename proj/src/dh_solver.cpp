#include "vmstar/dh_solver.hpp"

#include <algorithm>

#include "vmstar/dh.hpp"

namespace vmstar {

TargetForm classify_target_form(const Graph& g, const std::vector<Label>& target) {
    TargetForm form;
    form.kind = TargetForm::Kind::Other;
    std::vector<Label> sorted(target);
    std::sort(sorted.begin(), sorted.end());

    // First vertex adjacent to all others in the target set.
    std::optional<Label> center;
    for (const auto& c : sorted) {
        bool all = true;
        for (const auto& v : sorted)
            if (!(v == c) && !g.adjacent(c, v)) {
                all = false;
                break;
            }
        if (all) {
            center = c;
            break;
        }
    }
    if (!center) return form;
    form.center = *center;

    for (const auto& v : sorted) {
        if (v == *center) continue;
        bool bad = false;
        for (const auto& w : sorted)
            if (!(w == *center) && !(w == v) && g.adjacent(v, w)) bad = true;
        (bad ? form.bad : form.clean).push_back(v);
    }
    if (form.bad.empty()) {
        form.kind = TargetForm::Kind::Star;
        return form;
    }
    Graph b = g.induced(form.bad);
    auto shape = b.classify();
    if (shape.shape == GraphShape::Complete)
        form.kind = TargetForm::Kind::CompleteStar;
    else if (shape.shape == GraphShape::Star)
        form.kind = TargetForm::Kind::StarStar;
    else
        form.kind = TargetForm::Kind::Other;
    return form;
}

std::optional<PredicateWitness> predicate_p(const Graph& g, const TargetForm& form) {
    int n = g.size();
    int ci = g.index_of(form.center);
    Bitset bad(n), clean(n), in_target(n);
    for (const auto& b : form.bad) bad.set(g.index_of(b));
    for (const auto& l : form.clean) clean.set(g.index_of(l));
    in_target = bad;
    in_target.or_with(clean);
    in_target.set(ci);

    // Vertices adjacent to anything in V' \ {center}; helpers must avoid
    // all of them.
    Bitset touched(n);
    bad.for_each([&](int b) { touched.or_with(g.row(b)); });
    clean.for_each([&](int l) { touched.or_with(g.row(l)); });

    for (int u = 0; u < n; ++u) {
        if (in_target.get(u)) continue;
        if (!bad.subset_of(g.row(u))) continue;
        if (clean.intersects(g.row(u))) continue;
        if (!g.adjacent_i(u, ci)) return PredicateWitness{g.label(u), std::nullopt};
        Bitset hs = g.row(u);
        hs.and_with(g.row(ci));
        std::optional<Label> helper;
        hs.for_each([&](int h) {
            if (helper) return;
            if (touched.get(h) || in_target.get(h)) return;
            helper = g.label(h);
        });
        if (helper) return PredicateWitness{g.label(u), helper};
    }
    return std::nullopt;
}

namespace {

void apply_lc(Graph& work, std::vector<Move>& moves, const Label& v) {
    work.local_complement_inplace_i(work.index_of(v));
    moves.push_back(Move::lc(v));
}

}  // namespace

std::pair<std::vector<Move>, TargetForm> connect_vertex(Graph& work,
                                                        const std::vector<Label>& attached,
                                                        const Label& center, const Label& f) {
    std::vector<Move> moves;
    std::vector<Label> cur(attached);
    if (std::find(cur.begin(), cur.end(), f) == cur.end()) cur.push_back(f);

    if (!work.adjacent(f, center)) {
        std::vector<Label> path = work.shortest_path(f, center);
        if (path.empty()) throw NotConnected("no path from '" + f.text() + "' to the center");
        // Walk the interior of the path. A pivot on (f, p_i) hands f the
        // neighbors of p_i; when f touches a current leaf instead, one
        // local complementation there links f to the center directly.
        for (size_t i = 1; i + 1 < path.size(); ++i) {
            std::optional<Label> leaf_nb;
            for (const auto& l : cur)
                if (!(l == f) && !(l == center) && work.adjacent(f, l)) {
                    leaf_nb = l;
                    break;
                }
            if (leaf_nb) {
                apply_lc(work, moves, *leaf_nb);
                break;
            }
            apply_lc(work, moves, f);
            apply_lc(work, moves, path[i]);
            apply_lc(work, moves, f);
        }
    }
    if (!work.adjacent(f, center)) throw Error("internal: connect_vertex failed to reach the center");

    TargetForm form = classify_target_form(work, cur);
    if (form.kind == TargetForm::Kind::Other)
        throw Error("internal: connect_vertex produced a non star-star shape");
    return {std::move(moves), std::move(form)};
}

namespace {

// Bad-edge removal rounds: at most two predicate applications, with the
// tau_center escape when no clean vertex is left. Returns false when the
// predicate fails (star impossible for DH inputs).
bool remove_bad_edges(Graph& work, std::vector<Move>& moves, const std::vector<Label>& target_set) {
    for (int round = 0; round < 2; ++round) {
        TargetForm form = classify_target_form(work, target_set);
        if (form.kind == TargetForm::Kind::Other)
            throw Error("internal: working graph lost its star-star shape");
        if (form.kind == TargetForm::Kind::Star) return true;
        if (form.clean.empty()) {
            // Everything except the center is bad: complementing at the
            // center leaves a complete-star with one clean vertex (or the
            // star itself when only two bad vertices were present).
            apply_lc(work, moves, form.center);
            form = classify_target_form(work, target_set);
            if (form.kind == TargetForm::Kind::Star) return true;
            if (form.kind == TargetForm::Kind::Other || form.clean.empty())
                throw Error("internal: center complementation left a malformed shape");
        }
        auto wit = predicate_p(work, form);
        if (!wit) return false;
        if (wit->helper) apply_lc(work, moves, *wit->helper);
        apply_lc(work, moves, wit->u);
    }
    TargetForm final_form = classify_target_form(work, target_set);
    if (final_form.kind != TargetForm::Kind::Star)
        throw Error("internal: bad edges remain after two removal rounds");
    return true;
}

}  // namespace

SolverVerdict solve_star(const Graph& g, const std::vector<Label>& target,
                         const SolverOptions& opt) {
    std::vector<Label> tset(target);
    std::sort(tset.begin(), tset.end());
    tset.erase(std::unique(tset.begin(), tset.end()), tset.end());
    for (const auto& t : tset)
        if (!g.has_vertex(t)) throw InvalidTarget("target vertex '" + t.text() + "' not in graph");

    auto finish_plan = [&](std::vector<Move> moves, bool certified) {
        Plan plan;
        plan.moves = std::move(moves);
        plan.source_vertices = g.labels();
        plan.target_vertices = tset;
        for (const auto& v : g.labels())
            if (!std::binary_search(tset.begin(), tset.end(), v)) plan.moves.push_back(Move::mz(v));
        // Plans are always replay-verified before they are emitted.
        Graph replay = apply_plan(g, plan);
        if (tset.size() == 2) {
            if (!replay.adjacent(tset[0], tset[1]))
                throw Error("internal: emitted plan does not replay to an edge");
        } else if (tset.size() > 2) {
            if (replay.classify().shape != GraphShape::Star)
                throw Error("internal: emitted plan does not replay to a star");
        }
        return SolverVerdict{SolveStatus::Plan, std::move(plan), certified};
    };

    if (tset.size() <= 1) return finish_plan({}, true);

    // All target vertices must share one connected component; local
    // complementations never join components, so a split target is a
    // certified negative regardless of the graph class.
    Bitset comp = g.component_of_i(g.index_of(tset[0]));
    for (const auto& t : tset)
        if (!comp.get(g.index_of(t))) return {SolveStatus::NotVertexMinor, std::nullopt, true};

    bool certified = opt.assume_dh;
    if (!opt.assume_dh) {
        std::vector<Label> comp_labels;
        comp.for_each([&](int i) { comp_labels.push_back(g.label(i)); });
        certified = is_distance_hereditary(g.induced(comp_labels));
    }

    // Already a star on the full target set: measure the rest and stop.
    if (classify_target_form(g, tset).kind == TargetForm::Kind::Star)
        return finish_plan({}, certified);

    Graph work = g;
    std::vector<Move> moves;
    std::vector<Label> attached{tset[0]};
    Label center = tset[0];
    for (size_t j = 1; j < tset.size(); ++j) {
        const Label& f = tset[j];
        std::vector<Label> next(attached);
        next.push_back(f);
        // Nothing to do when the grown set already induces a star.
        TargetForm pre = classify_target_form(work, next);
        if (pre.kind != TargetForm::Kind::Star) {
            auto [frag, form] = connect_vertex(work, attached, center, f);
            moves.insert(moves.end(), frag.begin(), frag.end());
            if (!remove_bad_edges(work, moves, next)) {
                if (certified) return {SolveStatus::NotVertexMinor, std::nullopt, true};
                return {SolveStatus::UnknownNotDH, std::nullopt, false};
            }
        }
        attached = std::move(next);
        center = classify_target_form(work, attached).center;
    }
    return finish_plan(std::move(moves), certified);
}

}  // namespace vmstar
