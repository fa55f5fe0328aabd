#pragma once

#include <optional>
#include <vector>

#include "vmstar/graph.hpp"

namespace vmstar {

enum class MoveKind { LC, MeasX, MeasY, MeasZ };

enum class Basis { X, Y, Z };

// One primitive step of a transformation: a local complementation or a
// single-qubit Pauli measurement. MeasX carries the pivot partner so that a
// replay is deterministic; when absent, min(N_v) is used.
struct Move {
    MoveKind kind;
    Label v;
    std::optional<Label> partner;

    static Move lc(const Label& v) { return {MoveKind::LC, v, std::nullopt}; }
    static Move mx(const Label& v, std::optional<Label> partner = std::nullopt) {
        return {MoveKind::MeasX, v, partner};
    }
    static Move my(const Label& v) { return {MoveKind::MeasY, v, std::nullopt}; }
    static Move mz(const Label& v) { return {MoveKind::MeasZ, v, std::nullopt}; }

    bool is_measurement() const { return kind != MoveKind::LC; }

    friend bool operator==(const Move& a, const Move& b) {
        return a.kind == b.kind && a.v == b.v && a.partner == b.partner;
    }
};

// An ordered list of moves witnessing a vertex-minor relation. Pure graph
// data; outcome-dependent corrections live in the tableau verifier.
struct Plan {
    std::vector<Move> moves;
    std::vector<Label> source_vertices;
    std::vector<Label> target_vertices;

    int measurement_count() const {
        int c = 0;
        for (const auto& m : moves) c += m.is_measurement();
        return c;
    }
};

// Checks the plan's structural invariants: each vertex measured at most
// once, targets are sources, and no target is measured. Throws InvalidPlan.
void validate_plan(const Plan& p);

// The measurement-induced rewrites: Z deletes v, Y applies tau_v then
// deletes, X pivots on (partner, v) then deletes.
Graph measure(const Graph& g, Basis basis, const Label& v,
              std::optional<Label> partner = std::nullopt);

// Applies one move to a working graph; throws with the underlying reason if
// invalid against the current graph.
Graph apply_move(const Graph& g, const Move& m);

// Replays a full plan; the first invalid move is reported with its index.
Graph apply_plan(const Graph& g, const Plan& p);

}  // namespace vmstar
