#pragma once

// Brute-force search over the stabilization graph on label-free states.
//
// Nodes are (g12, g13, g23, b); component labels are erased, so the Same
// moves on different components of one surface collapse to a single edge.
// The effect table is re-derived here from the genus formula rather than
// taken from moves.hpp, so results from this module can serve as an
// independent check on the labeled engine.
//
// Every stabilization raises h1 + h2 + h3 by exactly one, so BFS depth from a
// start node equals the growth of that sum, and the graph restricted to
// sum <= max_sum is finite.

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trisect/core.hpp"

namespace trisect {

struct MoveGraphNode {
    int g12 = 0;
    int g13 = 0;
    int g23 = 0;
    int b = 1;

    /// h1 + h2 + h3 = 2(g12 + g13 + g23) + 3b - 3.
    int handle_sum() const noexcept { return 2 * (g12 + g13 + g23) + 3 * b - 3; }
    Profile profile() const;
    bool is_trivial() const noexcept { return g12 == 0 && g13 == 0 && g23 == 0 && b == 1; }
    bool valid() const noexcept { return g12 >= 0 && g13 >= 0 && g23 >= 0 && b >= 1; }
    std::string str() const;  // "(g12,g13,g23;b)"

    auto operator<=>(const MoveGraphNode&) const = default;
};

MoveGraphNode node_of(const TrisectionState& state);
std::optional<MoveGraphNode> node_from_profile(const Profile& p);

/// Fresh labeled state c0..c(b-1) for a node.
TrisectionState state_of(const MoveGraphNode& node);

/// A label-free edge: stabilize `handlebody` along a Same or Distinct arc.
struct NodeMove {
    Handlebody handlebody = Handlebody::H1;
    ArcClass::Kind kind = ArcClass::Kind::Same;

    bool operator==(const NodeMove&) const = default;
};

/// Out-edges in deterministic order (handlebody, then Same before Distinct).
std::vector<std::pair<NodeMove, MoveGraphNode>> successors(const MoveGraphNode& node);

/// Smallest node among the images of `node` under the six relabelings of
/// the handlebodies.
MoveGraphNode canonical_under_relabeling(const MoveGraphNode& node);

struct ExploreOptions {
    /// Identify nodes that differ by a permutation of the handlebodies.
    bool quotient_relabeling = false;
};

struct ReachableSet {
    /// Node -> BFS depth, in lexicographic node order.
    std::map<MoveGraphNode, int> depth;
    /// layers[k] = nodes at distance exactly k, sorted.
    std::vector<std::vector<MoveGraphNode>> layers;

    bool contains(const MoveGraphNode& n) const { return depth.contains(n); }
};

ReachableSet bfs_reachable(const MoveGraphNode& start, int max_sum, const ExploreOptions& options = {});

/// Minimum-length stabilization path from `from` to `to` using at most
/// `depth_bound` moves, or nullopt.
std::optional<std::vector<NodeMove>> shortest_path(const MoveGraphNode& from, const MoveGraphNode& to,
                                                   int depth_bound);

/// The same path realized as a labeled script on state_of(from) with the
/// canonical component choices.
std::optional<MoveScript> shortest_script(const MoveGraphNode& from, const MoveGraphNode& to, int depth_bound);

struct CommonStabilization {
    MoveGraphNode node;
    MoveScript script_a;
    MoveScript script_b;
};

/// A node reachable from both inputs with minimal handle sum (ties broken
/// lexicographically) among nodes with handle sum <= bound.  Parameter
/// shadow only: say nothing about isotopy.
std::optional<CommonStabilization> common_stabilization_search(const MoveGraphNode& a, const MoveGraphNode& b,
                                                               int bound);

// ---------------------------------------------------------------------------
// Exhaustive verification
// ---------------------------------------------------------------------------

/// Extra handle-sum headroom given to the common-stabilization check at
/// max_sum: ceil(max_sum / 2).  Tight: (0,0,g;1) and (0,g,0;1) first meet at
/// handle sum 3g.
int common_stabilization_slack(int max_sum);

/// Every feasible node with handle sum <= max_sum, sorted.
std::vector<MoveGraphNode> enumerate_nodes(int max_sum);

struct PropertyResult {
    std::string property;
    int max_sum = 0;
    bool pass = true;
    std::vector<MoveGraphNode> counterexamples;
    std::string detail;
};

struct VerificationReport {
    int max_sum = 0;
    int slack = 0;
    std::vector<PropertyResult> properties;

    bool all_pass() const;
};

/// Properties over all feasible nodes with handle sum <= max_sum:
///   parity        feasibility matches the genus-formula image; balanced
///                 feasible profiles have h + b odd
///   balance       balance() reaches max(h_i) with b' <= max(b,2) in
///                 3*max - sum moves (BFS cross-check for sums <= 12)
///   build_heegaard  2 g_jk + b - 1 moves and final h_i = h_j + h_k, all i
///   unique_moveless trivial is the only node without out-edges
///   common_stabilization  every non-trivial pair meets within
///                 max_sum + slack; pairs with trivial never do
/// `threads` > 1 splits the pair check across threads; output is unchanged.
VerificationReport verify_properties(int max_sum, int threads = 1);

}  // namespace trisect
