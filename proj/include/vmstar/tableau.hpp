#pragma once

#include <optional>
#include <vector>

#include "vmstar/plan.hpp"

namespace vmstar {

enum class Outcome { Plus, Minus };

// Pure stabilizer state on n qubits as n generator rows. A row is
// i^phase * prod_q X_q^x Z_q^z with phase in Z4; Hermitian rows keep
// phase + #Y factors even. Qubits map one-to-one onto vertex labels.
class Tableau {
public:
    Tableau() = default;

    // Stabilizers K_v = X_v prod_{u ~ v} Z_u of the graph state |g>.
    static Tableau graph_state(const Graph& g);

    int qubit_count() const { return n_; }
    const std::vector<Label>& qubits() const { return qubits_; }

    // Single-qubit gates by conjugation; CZ for completeness.
    void h(int q);
    void s(int q);
    void sdg(int q);
    void z(int q);
    void x(int q);
    void cz(int a, int b);

    int index_of(const Label& v) const;

    // The local complementation circuit: sqrt(-iX) on v and sqrt(iZ) on
    // every neighbor of v in the tracked graph g.
    void apply_lc_circuit(const Graph& g, const Label& v);

    // Measures single-qubit Pauli `basis` on qubit v. If the outcome is
    // determined and `want` disagrees, throws InvalidOutcomeRequest. The
    // measured qubit stays in the tableau (in a product eigenstate) until
    // discard() removes it. Returns whether the outcome was deterministic.
    bool measure(Basis basis, const Label& v, Outcome want);

    // Removes a qubit that is in a product single-qubit stabilizer state
    // after a measurement.
    void discard(const Label& v);

    // Unique generator basis: Gaussian elimination to reduced row echelon
    // form over (x|z) columns with phases carried along. Two tableaus
    // describe the same state iff their canonical forms are identical.
    void canonicalize();

    // Structural invariants: pairwise commuting rows, full rank.
    bool rows_commute() const;
    bool full_rank() const;

    friend bool operator==(const Tableau& a, const Tableau& b);

    // State equality (canonical forms coincide).
    static bool same_state(Tableau a, Tableau b);

private:
    void row_mult(int i, int j);  // row_i *= row_j
    bool anticommutes(int row, int q, int px, int pz) const;

    int n_ = 0;
    std::vector<Label> qubits_;   // sorted
    std::vector<Bitset> x_, z_;   // rows
    std::vector<int> phase_;      // i^phase, mod 4
};

struct VerifyOptions {
    int qubit_cap = 16;
};

struct VerifyResult {
    bool ok;
    // Outcome bits (0 = +1, 1 = -1) per measurement move, for the first
    // failing branch when !ok.
    std::vector<int> failing_branch;
};

// Simulates |g> under the plan's moves, exploring both outcomes of every
// measurement and applying the outcome-conditioned local Clifford
// corrections computed from the pre-measurement graph. Accepts iff every
// branch ends exactly in |target>.
VerifyResult verify_plan(const Graph& g, const Graph& target, const Plan& plan,
                         const VerifyOptions& opt = {});

}  // namespace vmstar
