#pragma once

// Stabilization calculus on trisection states.
//
// Stabilizing H_i along a nonseparating arc in the opposite surface S_jk
// raises h_i by one and leaves h_j, h_k alone.  Only the arc's endpoint
// pattern matters at this level:
//
//   Same(c)       both ends on component c   g_jk -= 1, c splits,   b += 1
//   Distinct(c,d) ends on two components     g_ij, g_ik += 1, c,d merge, b -= 1
//
// A Same arc exists iff g_jk >= 1; a Distinct arc exists iff b >= 2.  All
// arcs with the same effect are collapsed to one class, so isotopy
// information about the arc is not represented.

#include <vector>

#include "trisect/core.hpp"

namespace trisect {

struct StabMove {
    Handlebody handlebody = Handlebody::H1;
    ArcClass arc;

    bool operator==(const StabMove&) const = default;
};

/// Formal inverse of a stabilization.  `band` records where the band that
/// the pinch attaches to S_jk has its ends: Distinct(x,y) re-merges two
/// components (undoing a Same stabilization, g_jk += 1), Same(z) splits one
/// (undoing a Distinct stabilization, g_ij and g_ik -= 1).  Legality is only
/// arithmetic; a destabilizing disk need not exist.
struct DestabMove {
    Handlebody handlebody = Handlebody::H1;
    ArcClass band;

    bool operator==(const DestabMove&) const = default;
};

/// Appended to the label of every destabilized state.
inline constexpr const char* kFormalDestabCaveat =
    "formal destabilization: parameter-legal only, no destabilizing disk is certified";

/// Every arc class, per handlebody in index order: Same moves per component,
/// then Distinct moves per unordered pair, both in component order.
std::vector<StabMove> legal_moves(const TrisectionState& state);

bool is_legal(const TrisectionState& state, const StabMove& move);
bool is_legal(const TrisectionState& state, const DestabMove& move);

/// Throws IllegalMove.
TrisectionState apply_stabilization(const TrisectionState& state, const StabMove& move);
TrisectionState apply_destabilization(const TrisectionState& state, const DestabMove& move);

/// The destabilization undoing the stabilization recorded in `record`.
DestabMove inverse(const MoveRecord& record);

/// Canonical arc in S_jk for stabilizing H_i: Distinct on the two smallest
/// components when b >= 2, otherwise Same on the smallest component.
/// Throws IllegalMove when neither exists.
StabMove canonical_move(const TrisectionState& state, Handlebody i);

// ---------------------------------------------------------------------------
// Compound operations
// ---------------------------------------------------------------------------

struct MoveResult {
    TrisectionState state;
    MoveScript script;
};

/// Stabilize H2 and then H1 so that the net effect is g12 += 1 with g13, g23
/// and b unchanged.  With b >= 2 the first move is Distinct in S13 and the
/// second is Same in S23 on the merged component; with b = 1 the first move is
/// Same in S13 (needs g13 >= 1) and the second joins the two halves in S23.
/// The state's history gets both stabilizations; the returned script holds a
/// single fake_stab record.
MoveResult fake_heegaard_stab(const TrisectionState& state);

/// Same, with the first constituent's arc in S13 given explicitly.
MoveResult fake_heegaard_stab(const TrisectionState& state, const ArcClass& first_arc);

bool fake_heegaard_stab_legal(const TrisectionState& state);

/// The stabilization balance() would apply next: H_k is the minimum-genus
/// handlebody of an ordering h_i >= h_j >= h_k (ties broken by index), the
/// arc lies in S_ij.
StabMove balancing_move(const TrisectionState& state);

/// Stabilize the smallest handlebody until all three genera equal
/// max(h1,h2,h3).  Uses 3*max - (h1+h2+h3) moves and never lets b exceed
/// max(b, 2).
MoveResult balance(const TrisectionState& state);

struct HeegaardResult {
    TrisectionState state;
    int heegaard_genus = 0;
    MoveScript script;
};

/// Stabilize H_i along a maximal arc system in S_jk until S_jk is a disk.
/// Takes 2*g_jk + b - 1 moves; the final h_i equals h_j + h_k.
HeegaardResult build_heegaard(const TrisectionState& state, Handlebody i);

}  // namespace trisect
