#include "vmstar/tableau.hpp"

#include <algorithm>
#include <set>

namespace vmstar {

Tableau Tableau::graph_state(const Graph& g) {
    Tableau t;
    t.n_ = g.size();
    t.qubits_ = g.labels();
    t.x_.assign(t.n_, Bitset(t.n_));
    t.z_.assign(t.n_, Bitset(t.n_));
    t.phase_.assign(t.n_, 0);
    for (int v = 0; v < t.n_; ++v) {
        t.x_[v].set(v);
        t.z_[v] = g.row(v);
    }
    return t;
}

int Tableau::index_of(const Label& v) const {
    auto it = std::lower_bound(qubits_.begin(), qubits_.end(), v);
    if (it == qubits_.end() || !(*it == v))
        throw UnknownVertex("qubit '" + v.text() + "' is not in the tableau");
    return int(it - qubits_.begin());
}

// Gate conjugation rules for rows i^r prod X^x Z^z with per-qubit X-then-Z
// order; phases live in Z4.
void Tableau::h(int q) {
    for (int r = 0; r < n_; ++r) {
        bool x = x_[r].get(q), z = z_[r].get(q);
        if (x && z) phase_[r] = (phase_[r] + 2) & 3;
        x_[r].assign(q, z);
        z_[r].assign(q, x);
    }
}

void Tableau::s(int q) {
    for (int r = 0; r < n_; ++r)
        if (x_[r].get(q)) {
            z_[r].flip(q);
            phase_[r] = (phase_[r] + 1) & 3;
        }
}

void Tableau::sdg(int q) {
    for (int r = 0; r < n_; ++r)
        if (x_[r].get(q)) {
            z_[r].flip(q);
            phase_[r] = (phase_[r] + 3) & 3;
        }
}

void Tableau::z(int q) {
    for (int r = 0; r < n_; ++r)
        if (x_[r].get(q)) phase_[r] = (phase_[r] + 2) & 3;
}

void Tableau::x(int q) {
    for (int r = 0; r < n_; ++r)
        if (z_[r].get(q)) phase_[r] = (phase_[r] + 2) & 3;
}

void Tableau::cz(int a, int b) {
    for (int r = 0; r < n_; ++r) {
        bool xa = x_[r].get(a), xb = x_[r].get(b);
        if (xa && xb) phase_[r] = (phase_[r] + 2) & 3;
        if (xb) z_[r].flip(a);
        if (xa) z_[r].flip(b);
    }
}

void Tableau::row_mult(int i, int j) {
    phase_[i] = (phase_[i] + phase_[j] + 2 * z_[i].count_and(x_[j])) & 3;
    x_[i].xor_with(x_[j]);
    z_[i].xor_with(z_[j]);
}

void Tableau::apply_lc_circuit(const Graph& g, const Label& v) {
    int vt = index_of(v);
    h(vt);
    s(vt);
    h(vt);
    for (const auto& u : g.neighbors(v)) sdg(index_of(u));
}

bool Tableau::anticommutes(int row, int q, int px, int pz) const {
    int c = (x_[row].get(q) ? pz : 0) ^ (z_[row].get(q) ? px : 0);
    return c != 0;
}

namespace {

void basis_bits(Basis b, int& px, int& pz, int& pr) {
    switch (b) {
        case Basis::X: px = 1; pz = 0; pr = 0; return;
        case Basis::Y: px = 1; pz = 1; pr = 1; return;  // Y = i XZ
        case Basis::Z: px = 0; pz = 1; pr = 0; return;
    }
    throw Error("unreachable");
}

}  // namespace

bool Tableau::measure(Basis basis, const Label& v, Outcome want) {
    int q = index_of(v);
    int px, pz, pr;
    basis_bits(basis, px, pz, pr);

    std::vector<int> anti;
    for (int r = 0; r < n_; ++r)
        if (anticommutes(r, q, px, pz)) anti.push_back(r);

    if (!anti.empty()) {
        int g0 = anti[0];
        for (size_t i = 1; i < anti.size(); ++i) row_mult(anti[i], g0);
        x_[g0] = Bitset(n_);
        z_[g0] = Bitset(n_);
        if (px) x_[g0].set(q);
        if (pz) z_[g0].set(q);
        phase_[g0] = (pr + (want == Outcome::Minus ? 2 : 0)) & 3;
        return false;
    }

    // Deterministic: express P as a product of generators and compare
    // phases. GF(2) elimination over (x|z) with subset tracking.
    std::vector<Bitset> wx(x_), wz(z_);
    std::vector<uint64_t> combo(n_);
    for (int r = 0; r < n_; ++r) combo[r] = uint64_t(1) << r;
    int row = 0;
    std::vector<int> pivot_col;
    for (int col = 0; col < 2 * n_ && row < n_; ++col) {
        auto bit = [&](int r) { return col < n_ ? wx[r].get(col) : wz[r].get(col - n_); };
        int p = -1;
        for (int r = row; r < n_; ++r)
            if (bit(r)) {
                p = r;
                break;
            }
        if (p < 0) continue;
        std::swap(wx[row], wx[p]);
        std::swap(wz[row], wz[p]);
        std::swap(combo[row], combo[p]);
        for (int r = 0; r < n_; ++r)
            if (r != row && bit(r)) {
                wx[r].xor_with(wx[row]);
                wz[r].xor_with(wz[row]);
                combo[r] ^= combo[row];
            }
        pivot_col.push_back(col);
        ++row;
    }
    Bitset tx(n_), tz(n_);
    if (px) tx.set(q);
    if (pz) tz.set(q);
    uint64_t subset = 0;
    for (int r = 0; r < row; ++r) {
        int col = pivot_col[r];
        bool t = col < n_ ? tx.get(col) : tz.get(col - n_);
        if (t) {
            tx.xor_with(wx[r]);
            tz.xor_with(wz[r]);
            subset ^= combo[r];
        }
    }
    if (tx.any() || tz.any())
        throw Error("internal: commuting single-qubit Pauli outside the group span");

    // Accumulate the product phase of the subset.
    Bitset ax(n_), az(n_);
    int aphase = 0;
    for (int r = 0; r < n_; ++r)
        if ((subset >> r) & 1) {
            aphase = (aphase + phase_[r] + 2 * az.count_and(x_[r])) & 3;
            ax.xor_with(x_[r]);
            az.xor_with(z_[r]);
        }
    Outcome forced = aphase == pr ? Outcome::Plus : Outcome::Minus;
    if (((aphase - pr) & 3) != 0 && ((aphase - pr) & 3) != 2)
        throw Error("internal: non-Hermitian phase in measurement solve");
    if (forced != want)
        throw InvalidOutcomeRequest("measurement of qubit '" + v.text() +
                                    "' is deterministic with the other sign");
    return true;
}

void Tableau::discard(const Label& v) {
    int q = index_of(v);
    // Locate a subset multiplying to +-P_v (the single-qubit component
    // present at q) and concentrate it into one row.
    int comp_x = -1, comp_z = -1;
    for (int r = 0; r < n_; ++r) {
        if (x_[r].get(q) || z_[r].get(q)) {
            comp_x = x_[r].get(q);
            comp_z = z_[r].get(q);
            break;
        }
    }
    if (comp_x < 0) throw Error("internal: discard of an untouched qubit");
    // All rows touching q must carry the same single-qubit component.
    std::vector<int> touching;
    for (int r = 0; r < n_; ++r) {
        bool xq = x_[r].get(q), zq = z_[r].get(q);
        if (!xq && !zq) continue;
        if (int(xq) != comp_x || int(zq) != comp_z)
            throw Error("internal: discard of a qubit still entangled");
        touching.push_back(r);
    }
    // Clear q from all but the first toucher; afterwards only `keep`
    // mentions q, as +-P_q times some rest-support Q.
    int keep = touching[0];
    for (size_t i = 1; i < touching.size(); ++i) row_mult(touching[i], keep);

    // The group stabilizes +-P_q, so Q lies in the span of the other rows:
    // eliminate it away with subset tracking.
    std::vector<int> others;
    for (int r = 0; r < n_; ++r)
        if (r != keep) others.push_back(r);
    std::vector<Bitset> wx, wz;
    std::vector<uint64_t> combo;
    for (int r : others) {
        wx.push_back(x_[r]);
        wz.push_back(z_[r]);
        combo.push_back(uint64_t(1) << r);
    }
    int rows = int(others.size());
    int rank = 0;
    std::vector<int> pivot_col;
    for (int col = 0; col < 2 * n_ && rank < rows; ++col) {
        auto bit = [&](int r) { return col < n_ ? wx[r].get(col) : wz[r].get(col - n_); };
        int p = -1;
        for (int r = rank; r < rows; ++r)
            if (bit(r)) {
                p = r;
                break;
            }
        if (p < 0) continue;
        std::swap(wx[rank], wx[p]);
        std::swap(wz[rank], wz[p]);
        std::swap(combo[rank], combo[p]);
        for (int r = 0; r < rows; ++r)
            if (r != rank && bit(r)) {
                wx[r].xor_with(wx[rank]);
                wz[r].xor_with(wz[rank]);
                combo[r] ^= combo[rank];
            }
        pivot_col.push_back(col);
        ++rank;
    }
    Bitset tx(x_[keep]), tz(z_[keep]);
    tx.assign(q, false);
    tz.assign(q, false);
    uint64_t subset = 0;
    for (int r = 0; r < rank; ++r) {
        int col = pivot_col[r];
        bool t = col < n_ ? tx.get(col) : tz.get(col - n_);
        if (t) {
            tx.xor_with(wx[r]);
            tz.xor_with(wz[r]);
            subset ^= combo[r];
        }
    }
    if (tx.any() || tz.any()) throw Error("internal: could not isolate the measured qubit");
    for (int r = 0; r < n_; ++r)
        if ((subset >> r) & 1) row_mult(keep, r);
    if (!(x_[keep].count() == comp_x && z_[keep].count() == comp_z &&
          x_[keep].get(q) == bool(comp_x) && z_[keep].get(q) == bool(comp_z)))
        throw Error("internal: measured qubit row is not isolated");

    // Drop row `keep` and column q.
    Tableau out;
    out.n_ = n_ - 1;
    out.qubits_ = qubits_;
    out.qubits_.erase(out.qubits_.begin() + q);
    out.x_.assign(out.n_, Bitset(out.n_));
    out.z_.assign(out.n_, Bitset(out.n_));
    out.phase_.clear();
    int nr = 0;
    for (int r = 0; r < n_; ++r) {
        if (r == keep) continue;
        for (int c = 0, nc = 0; c < n_; ++c) {
            if (c == q) continue;
            out.x_[nr].assign(nc, x_[r].get(c));
            out.z_[nr].assign(nc, z_[r].get(c));
            ++nc;
        }
        out.phase_.push_back(phase_[r]);
        ++nr;
    }
    *this = std::move(out);
}

void Tableau::canonicalize() {
    int row = 0;
    for (int col = 0; col < 2 * n_ && row < n_; ++col) {
        auto bit = [&](int r) { return col < n_ ? x_[r].get(col) : z_[r].get(col - n_); };
        int p = -1;
        for (int r = row; r < n_; ++r)
            if (bit(r)) {
                p = r;
                break;
            }
        if (p < 0) continue;
        std::swap(x_[row], x_[p]);
        std::swap(z_[row], z_[p]);
        std::swap(phase_[row], phase_[p]);
        for (int r = 0; r < n_; ++r)
            if (r != row && bit(r)) row_mult(r, row);
        ++row;
    }
}

bool Tableau::rows_commute() const {
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j) {
            int s = (x_[i].count_and(z_[j]) + z_[i].count_and(x_[j])) & 1;
            if (s) return false;
        }
    return true;
}

bool Tableau::full_rank() const {
    std::vector<Bitset> wx(x_), wz(z_);
    int row = 0;
    for (int col = 0; col < 2 * n_ && row < n_; ++col) {
        auto bit = [&](int r) { return col < n_ ? wx[r].get(col) : wz[r].get(col - n_); };
        int p = -1;
        for (int r = row; r < n_; ++r)
            if (bit(r)) {
                p = r;
                break;
            }
        if (p < 0) continue;
        std::swap(wx[row], wx[p]);
        std::swap(wz[row], wz[p]);
        for (int r = row + 1; r < n_; ++r)
            if (bit(r)) {
                wx[r].xor_with(wx[row]);
                wz[r].xor_with(wz[row]);
            }
        ++row;
    }
    return row == n_;
}

bool operator==(const Tableau& a, const Tableau& b) {
    return a.n_ == b.n_ && a.qubits_ == b.qubits_ && a.x_ == b.x_ && a.z_ == b.z_ &&
           a.phase_ == b.phase_;
}

bool Tableau::same_state(Tableau a, Tableau b) {
    if (a.qubits_ != b.qubits_) return false;
    a.canonicalize();
    b.canonicalize();
    return a == b;
}

namespace {

std::optional<Outcome> forced_outcome(Tableau t, Basis basis, const Label& v) {
    // Probe by trying Plus; a deterministic Minus raises the typed error.
    try {
        bool det = t.measure(basis, v, Outcome::Plus);
        if (det) return Outcome::Plus;
        return std::nullopt;
    } catch (const InvalidOutcomeRequest&) {
        return Outcome::Minus;
    }
}

struct BranchVerifier {
    const Plan& plan;
    const Graph& target;
    Tableau target_state;
    std::vector<int> outcome_bits;
    std::vector<int> failing;
    bool ok = true;

    void apply_corrections(Tableau& t, const Graph& pre, const Move& m, Outcome out) {
        const Label& v = m.v;
        auto nbs = pre.neighbors(v);
        switch (m.kind) {
            case MoveKind::MeasZ:
                if (out == Outcome::Minus)
                    for (const auto& u : nbs) t.z(t.index_of(u));
                break;
            case MoveKind::MeasY:
                for (const auto& u : nbs)
                    out == Outcome::Plus ? t.sdg(t.index_of(u)) : t.s(t.index_of(u));
                break;
            case MoveKind::MeasX: {
                if (nbs.empty()) break;
                Label u0 = m.partner ? *m.partner : nbs.front();
                int u0q = t.index_of(u0);
                if (out == Outcome::Plus) {
                    // Z on N_v minus the closed neighborhood of u0, then the
                    // X->-Z, Z->X rotation on the partner.
                    for (const auto& u : nbs)
                        if (!(u == u0) && !pre.adjacent(u, u0)) t.z(t.index_of(u));
                    t.s(u0q);
                    t.s(u0q);
                    t.h(u0q);
                } else {
                    // Z on N_u0 minus the closed neighborhood of v, then the
                    // X->Z, Z->-X rotation on the partner.
                    for (const auto& u : pre.neighbors(u0))
                        if (!(u == v) && !pre.adjacent(u, v)) t.z(t.index_of(u));
                    t.h(u0q);
                    t.s(u0q);
                    t.s(u0q);
                }
                break;
            }
            case MoveKind::LC:
                break;
        }
    }

    void run(Tableau t, Graph cur, size_t idx) {
        if (!ok) return;
        if (idx == plan.moves.size()) {
            if (!Tableau::same_state(std::move(t), target_state)) {
                ok = false;
                failing = outcome_bits;
            }
            return;
        }
        const Move& m = plan.moves[idx];
        if (m.kind == MoveKind::LC) {
            t.apply_lc_circuit(cur, m.v);
            cur = cur.local_complement(m.v);
            run(std::move(t), std::move(cur), idx + 1);
            return;
        }
        Basis basis = m.kind == MoveKind::MeasX ? Basis::X
                                                : (m.kind == MoveKind::MeasY ? Basis::Y : Basis::Z);
        Graph post = measure(cur, basis, m.v, m.partner);
        auto det = forced_outcome(t, basis, m.v);
        for (Outcome out : {Outcome::Plus, Outcome::Minus}) {
            if (det && *det != out) continue;
            Tableau t2 = t;
            t2.measure(basis, m.v, out);
            apply_corrections(t2, cur, m, out);
            t2.discard(m.v);
            outcome_bits.push_back(out == Outcome::Minus ? 1 : 0);
            run(std::move(t2), post, idx + 1);
            outcome_bits.pop_back();
            if (!ok) return;
        }
    }
};

}  // namespace

VerifyResult verify_plan(const Graph& g, const Graph& target, const Plan& plan,
                         const VerifyOptions& opt) {
    if (g.size() > opt.qubit_cap)
        throw CapExceeded("plan verification capped at " + std::to_string(opt.qubit_cap) +
                          " qubits");
    validate_plan(plan);
    std::vector<Label> src = plan.source_vertices;
    std::sort(src.begin(), src.end());
    if (src != g.labels()) throw InvalidPlan(-1, "plan sources do not match the graph");
    std::vector<Label> tgt = plan.target_vertices;
    std::sort(tgt.begin(), tgt.end());
    if (tgt != target.labels()) throw InvalidPlan(-1, "plan targets do not match the target graph");
    // Every non-target vertex must be measured, or qubits would linger.
    {
        std::set<Label> measured;
        for (const auto& m : plan.moves)
            if (m.is_measurement()) measured.insert(m.v);
        for (const auto& v : g.labels())
            if (!target.has_vertex(v) && !measured.count(v))
                throw InvalidPlan(-1, "vertex '" + v.text() + "' is neither target nor measured");
    }

    BranchVerifier bv{plan, target, Tableau::graph_state(target), {}, {}, true};
    bv.run(Tableau::graph_state(g), g, 0);
    return {bv.ok, bv.failing};
}

}  // namespace vmstar
