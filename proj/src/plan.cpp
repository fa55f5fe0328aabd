#include "vmstar/plan.hpp"

#include <algorithm>
#include <set>

namespace vmstar {

void validate_plan(const Plan& p) {
    std::set<Label> sources(p.source_vertices.begin(), p.source_vertices.end());
    std::set<Label> targets(p.target_vertices.begin(), p.target_vertices.end());
    for (const auto& t : targets)
        if (!sources.count(t))
            throw InvalidPlan(-1, "target vertex '" + t.text() + "' is not a source vertex");
    std::set<Label> measured;
    for (size_t i = 0; i < p.moves.size(); ++i) {
        const Move& m = p.moves[i];
        if (!m.is_measurement()) continue;
        if (measured.count(m.v))
            throw InvalidPlan(int(i), "vertex '" + m.v.text() + "' measured more than once");
        if (targets.count(m.v))
            throw InvalidPlan(int(i), "target vertex '" + m.v.text() + "' is measured");
        measured.insert(m.v);
    }
}

Graph measure(const Graph& g, Basis basis, const Label& v, std::optional<Label> partner) {
    int vi = g.index_of(v);
    switch (basis) {
        case Basis::Z:
            return g.erased(v);
        case Basis::Y:
            return g.local_complement(v).erased(v);
        case Basis::X: {
            if (g.degree_i(vi) == 0) return g.erased(v);
            int p;
            if (partner) {
                p = g.index_of(*partner);
                if (!g.adjacent_i(p, vi))
                    throw InvalidPartner("partner '" + partner->text() +
                                         "' is not adjacent to measured vertex '" + v.text() + "'");
            } else {
                p = g.row(vi).lowest();
            }
            Graph h = g;
            h.pivot_inplace_i(p, vi);
            return h.erased(v);
        }
    }
    throw Error("unreachable");
}

Graph apply_move(const Graph& g, const Move& m) {
    switch (m.kind) {
        case MoveKind::LC:
            return g.local_complement(m.v);
        case MoveKind::MeasX:
            return measure(g, Basis::X, m.v, m.partner);
        case MoveKind::MeasY:
            return measure(g, Basis::Y, m.v);
        case MoveKind::MeasZ:
            return measure(g, Basis::Z, m.v);
    }
    throw Error("unreachable");
}

Graph apply_plan(const Graph& g, const Plan& p) {
    validate_plan(p);
    Graph cur = g;
    for (size_t i = 0; i < p.moves.size(); ++i) {
        try {
            cur = apply_move(cur, p.moves[i]);
        } catch (const InvalidPlan&) {
            throw;
        } catch (const Error& e) {
            throw InvalidPlan(int(i), "move " + std::to_string(i) + " invalid: " + e.what());
        }
    }
    return cur;
}

}  // namespace vmstar
