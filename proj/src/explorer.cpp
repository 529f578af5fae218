#include "trisect/explorer.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <set>
#include <thread>
#include <unordered_map>

#include "trisect/moves.hpp"

namespace trisect {

namespace {

// Surface slots in node order: 0 = S12, 1 = S13, 2 = S23.
constexpr std::array<int, 3> kOppositeSlot{2, 1, 0};  // facing H1, H2, H3

std::array<int, 3> handle_genera(const MoveGraphNode& n) {
    return {n.g12 + n.g13 + n.b - 1, n.g12 + n.g23 + n.b - 1, n.g13 + n.g23 + n.b - 1};
}

// Inverse of handle_genera; the caller guarantees a solution exists.
MoveGraphNode solve(const std::array<int, 3>& h, int b) {
    return {(h[0] + h[1] - h[2] + 1 - b) / 2, (h[0] + h[2] - h[1] + 1 - b) / 2, (h[1] + h[2] - h[0] + 1 - b) / 2,
            b};
}

int slot_genus(const MoveGraphNode& n, int slot) {
    switch (slot) {
        case 0: return n.g12;
        case 1: return n.g13;
        default: return n.g23;
    }
}

struct NodeHash {
    std::size_t operator()(const MoveGraphNode& n) const noexcept {
        std::uint64_t x = static_cast<std::uint32_t>(n.g12);
        x = x * 1000003u + static_cast<std::uint32_t>(n.g13);
        x = x * 1000003u + static_cast<std::uint32_t>(n.g23);
        x = x * 1000003u + static_cast<std::uint32_t>(n.b);
        return static_cast<std::size_t>(x ^ (x >> 29));
    }
};

void require_valid(const MoveGraphNode& n) {
    if (!n.valid()) {
        throw OutOfDomain("node " + n.str() + " has negative genus or b < 1");
    }
}

using Bits = std::vector<std::uint64_t>;

}  // namespace

Profile MoveGraphNode::profile() const {
    const auto h = handle_genera(*this);
    return Profile{h[0], h[1], h[2], b};
}

std::string MoveGraphNode::str() const {
    return "(" + std::to_string(g12) + "," + std::to_string(g13) + "," + std::to_string(g23) + ";" +
           std::to_string(b) + ")";
}

MoveGraphNode node_of(const TrisectionState& state) {
    const auto& g = state.genera();
    return {g.g12, g.g13, g.g23, state.b()};
}

std::optional<MoveGraphNode> node_from_profile(const Profile& p) {
    const auto g = genera_from_profile(p);
    if (!g) return std::nullopt;
    return MoveGraphNode{g->g12, g->g13, g->g23, p.b};
}

TrisectionState state_of(const MoveGraphNode& node) {
    require_valid(node);
    return TrisectionState({node.g12, node.g13, node.g23}, LinkComponentSet(node.b), {}, "node" + node.str());
}

std::vector<std::pair<NodeMove, MoveGraphNode>> successors(const MoveGraphNode& node) {
    std::vector<std::pair<NodeMove, MoveGraphNode>> out;
    const auto h = handle_genera(node);
    for (int i = 0; i < 3; ++i) {
        auto raised = h;
        raised[i] += 1;
        const Handlebody hb = handlebody_from_index(i + 1);
        // An arc with both ends on one circle is nonseparating iff the surface
        // has genus; the pinched-off circle adds a link component.
        if (slot_genus(node, kOppositeSlot[i]) >= 1) {
            out.push_back({{hb, ArcClass::Kind::Same}, solve(raised, node.b + 1)});
        }
        // An arc joining two circles is always nonseparating and fuses them.
        if (node.b >= 2) {
            out.push_back({{hb, ArcClass::Kind::Distinct}, solve(raised, node.b - 1)});
        }
    }
    return out;
}

MoveGraphNode canonical_under_relabeling(const MoveGraphNode& node) {
    std::array<int, 3> perm{0, 1, 2};
    MoveGraphNode best = node;
    const auto h = handle_genera(node);
    do {
        // Handlebody a becomes perm[a]; genera follow from the permuted profile.
        std::array<int, 3> permuted{};
        for (int a = 0; a < 3; ++a) permuted[perm[a]] = h[a];
        best = std::min(best, solve(permuted, node.b));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

ReachableSet bfs_reachable(const MoveGraphNode& start, int max_sum, const ExploreOptions& options) {
    require_valid(start);
    if (max_sum < start.handle_sum()) {
        throw OutOfDomain("max_sum is below the start node's handle sum");
    }
    const auto canon = [&](const MoveGraphNode& n) {
        return options.quotient_relabeling ? canonical_under_relabeling(n) : n;
    };
    ReachableSet result;
    std::vector<MoveGraphNode> frontier{canon(start)};
    result.depth[frontier.front()] = 0;
    for (int d = 0; !frontier.empty(); ++d) {
        result.layers.push_back(frontier);
        std::set<MoveGraphNode> next;
        for (const auto& n : frontier) {
            for (const auto& [move, succ] : successors(n)) {
                const auto c = canon(succ);
                if (c.handle_sum() <= max_sum && !result.depth.contains(c)) {
                    next.insert(c);
                }
            }
        }
        for (const auto& n : next) result.depth[n] = d + 1;
        frontier.assign(next.begin(), next.end());
    }
    return result;
}

std::optional<std::vector<NodeMove>> shortest_path(const MoveGraphNode& from, const MoveGraphNode& to,
                                                   int depth_bound) {
    require_valid(from);
    require_valid(to);
    if (from == to) return std::vector<NodeMove>{};
    std::unordered_map<MoveGraphNode, std::pair<MoveGraphNode, NodeMove>, NodeHash> parent;
    std::deque<std::pair<MoveGraphNode, int>> queue{{from, 0}};
    parent.emplace(from, std::pair{from, NodeMove{}});
    while (!queue.empty()) {
        const auto [node, d] = queue.front();
        queue.pop_front();
        if (d == depth_bound) continue;
        for (const auto& [move, succ] : successors(node)) {
            if (succ.handle_sum() > to.handle_sum() || parent.contains(succ)) continue;
            parent.emplace(succ, std::pair{node, move});
            if (succ == to) {
                std::vector<NodeMove> path;
                for (auto cur = to; cur != from; cur = parent.at(cur).first) {
                    path.push_back(parent.at(cur).second);
                }
                std::reverse(path.begin(), path.end());
                return path;
            }
            queue.emplace_back(succ, d + 1);
        }
    }
    return std::nullopt;
}

std::optional<MoveScript> shortest_script(const MoveGraphNode& from, const MoveGraphNode& to, int depth_bound) {
    const auto path = shortest_path(from, to, depth_bound);
    if (!path) return std::nullopt;
    TrisectionState state = state_of(from);
    MoveScript script;
    for (const auto& step : *path) {
        const auto& comps = state.link().components();
        const ArcClass arc = step.kind == ArcClass::Kind::Same ? ArcClass::same(comps[0])
                                                               : ArcClass::distinct(comps[0], comps[1]);
        state = apply_stabilization(state, {step.handlebody, arc});
        script.push_back(state.history().back());
    }
    return script;
}

std::optional<CommonStabilization> common_stabilization_search(const MoveGraphNode& a, const MoveGraphNode& b,
                                                               int bound) {
    require_valid(a);
    require_valid(b);
    if (a == b) return CommonStabilization{a, {}, {}};
    if (bound < std::max(a.handle_sum(), b.handle_sum())) return std::nullopt;
    const auto ra = bfs_reachable(a, bound);
    const auto rb = bfs_reachable(b, bound);
    std::optional<MoveGraphNode> best;
    for (const auto& [node, depth] : ra.depth) {
        if (!rb.contains(node)) continue;
        if (!best || std::pair{node.handle_sum(), node} < std::pair{best->handle_sum(), *best}) best = node;
    }
    if (!best) return std::nullopt;
    return CommonStabilization{*best, *shortest_script(a, *best, bound), *shortest_script(b, *best, bound)};
}

// ---------------------------------------------------------------------------
// Verification
// ---------------------------------------------------------------------------

int common_stabilization_slack(int max_sum) { return (max_sum + 1) / 2; }

std::vector<MoveGraphNode> enumerate_nodes(int max_sum) {
    std::vector<MoveGraphNode> nodes;
    for (int b = 1; 3 * b - 3 <= max_sum; ++b) {
        const int genus_budget = (max_sum - 3 * b + 3) / 2;
        for (int g12 = 0; g12 <= genus_budget; ++g12) {
            for (int g13 = 0; g12 + g13 <= genus_budget; ++g13) {
                for (int g23 = 0; g12 + g13 + g23 <= genus_budget; ++g23) {
                    nodes.push_back({g12, g13, g23, b});
                }
            }
        }
    }
    std::sort(nodes.begin(), nodes.end());
    return nodes;
}

bool VerificationReport::all_pass() const {
    return std::all_of(properties.begin(), properties.end(), [](const auto& p) { return p.pass; });
}

namespace {

PropertyResult check_parity(const std::vector<MoveGraphNode>& nodes, int max_sum) {
    PropertyResult r{"parity", max_sum, true, {}, {}};
    std::map<Profile, MoveGraphNode> image;
    for (const auto& n : nodes) image.emplace(n.profile(), n);
    int checked = 0;
    for (int b = 1; b <= max_sum + 1; ++b) {
        for (int h1 = 0; h1 <= max_sum; ++h1) {
            for (int h2 = 0; h1 + h2 <= max_sum; ++h2) {
                for (int h3 = 0; h1 + h2 + h3 <= max_sum; ++h3) {
                    const Profile p{h1, h2, h3, b};
                    ++checked;
                    const bool feasible = is_feasible(p);
                    if (feasible != image.contains(p)) {
                        r.pass = false;
                        r.counterexamples.push_back(feasible ? *node_from_profile(p) : image.at(p));
                    }
                    if (feasible && p.is_balanced() && (h1 + b) % 2 == 0) {
                        r.pass = false;
                        r.counterexamples.push_back(*node_from_profile(p));
                    }
                }
            }
        }
    }
    r.detail = std::to_string(checked) + " profiles against the image of " + std::to_string(nodes.size()) +
               " genus tuples";
    return r;
}

PropertyResult check_balance(const std::vector<MoveGraphNode>& nodes, int max_sum) {
    constexpr int kCrossCheckSum = 12;
    PropertyResult r{"balance", max_sum, true, {}, {}};
    int cross_checked = 0;
    for (const auto& n : nodes) {
        const Profile p = n.profile();
        const auto result = balance(state_of(n));
        const Profile q = result.state.profile();
        const int top = p.max_genus();
        bool ok = q.is_balanced() && q.h1 == top && q.b <= std::max(p.b, 2) &&
                  static_cast<int>(result.script.size()) == 3 * top - p.sum();
        if (ok && p.sum() <= kCrossCheckSum) {
            ok = bfs_reachable(n, q.sum()).contains(node_of(result.state));
            ++cross_checked;
        }
        if (!ok) {
            r.pass = false;
            r.counterexamples.push_back(n);
        }
    }
    r.detail = std::to_string(nodes.size()) + " nodes; BFS reachability cross-checked on " +
               std::to_string(cross_checked) + " nodes with handle sum <= " + std::to_string(kCrossCheckSum);
    return r;
}

PropertyResult check_build_heegaard(const std::vector<MoveGraphNode>& nodes, int max_sum) {
    PropertyResult r{"build_heegaard", max_sum, true, {}, {}};
    for (const auto& n : nodes) {
        const auto state = state_of(n);
        const Profile p = n.profile();
        bool ok = true;
        for (const auto i : kHandlebodies) {
            const auto [j, k] = complement(i);
            const auto built = build_heegaard(state, i);
            const int moves = static_cast<int>(built.script.size());
            ok = ok && moves == 2 * state.genera().opposite(i) + p.b - 1;
            ok = ok && built.heegaard_genus == p.h(j) + p.h(k);
            ok = ok && built.state.genera().opposite(i) == 0 && built.state.b() == 1;
            if (p.is_balanced()) {
                ok = ok && moves == p.h1 && built.heegaard_genus == 2 * p.h1;
            }
        }
        if (!ok) {
            r.pass = false;
            r.counterexamples.push_back(n);
        }
    }
    r.detail = std::to_string(nodes.size()) + " nodes x 3 handlebodies";
    return r;
}

PropertyResult check_unique_moveless(const std::vector<MoveGraphNode>& nodes, int max_sum) {
    PropertyResult r{"unique_moveless", max_sum, true, {}, {}};
    int moveless = 0;
    for (const auto& n : nodes) {
        if (!successors(n).empty()) continue;
        ++moveless;
        if (!n.is_trivial()) {
            r.pass = false;
            r.counterexamples.push_back(n);
        }
    }
    if (moveless != 1) r.pass = false;
    r.detail = std::to_string(moveless) + " moveless node(s)";
    return r;
}

PropertyResult check_common_stabilization(const std::vector<MoveGraphNode>& nodes, int max_sum, int slack,
                                          int threads) {
    const int bound = max_sum + slack;
    PropertyResult r{"common_stabilization", max_sum, true, {}, {}};

    const auto universe = enumerate_nodes(bound);
    std::unordered_map<MoveGraphNode, std::size_t, NodeHash> index;
    for (std::size_t n = 0; n < universe.size(); ++n) index.emplace(universe[n], n);
    const std::size_t words = (universe.size() + 63) / 64;

    std::vector<Bits> reach(nodes.size(), Bits(words, 0));
    const auto fill = [&](std::size_t lo, std::size_t hi) {
        std::vector<std::size_t> stack;
        for (std::size_t s = lo; s < hi; ++s) {
            auto& bits = reach[s];
            stack.assign(1, index.at(nodes[s]));
            bits[stack.front() / 64] |= std::uint64_t{1} << (stack.front() % 64);
            while (!stack.empty()) {
                const auto cur = stack.back();
                stack.pop_back();
                for (const auto& [move, succ] : successors(universe[cur])) {
                    if (succ.handle_sum() > bound) continue;
                    const auto id = index.at(succ);
                    auto& word = bits[id / 64];
                    const auto mask = std::uint64_t{1} << (id % 64);
                    if (!(word & mask)) {
                        word |= mask;
                        stack.push_back(id);
                    }
                }
            }
        }
    };

    // Row s owns pairs (s, t) for t >= s.
    std::vector<std::vector<std::size_t>> failures(nodes.size());
    std::vector<long long> pair_counts(nodes.size(), 0);
    const auto meet = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t s = lo; s < hi; ++s) {
            for (std::size_t t = s; t < nodes.size(); ++t) {
                bool common = false;
                for (std::size_t w = 0; w < words && !common; ++w) common = (reach[s][w] & reach[t][w]) != 0;
                const bool has_trivial = nodes[s].is_trivial() || nodes[t].is_trivial();
                const bool expected = !has_trivial || s == t;
                ++pair_counts[s];
                if (common != expected) failures[s].push_back(t);
            }
        }
    };

    const auto run_split = [&](const auto& work) {
        const std::size_t n = nodes.size();
        const std::size_t workers = static_cast<std::size_t>(std::max(1, threads));
        if (workers == 1) {
            work(std::size_t{0}, n);
            return;
        }
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t s = w; s < n; s += workers) work(s, s + 1);
            });
        }
        for (auto& t : pool) t.join();
    };
    run_split(fill);
    run_split(meet);

    long long pairs = 0;
    for (std::size_t s = 0; s < nodes.size(); ++s) {
        pairs += pair_counts[s];
        for (const auto t : failures[s]) {
            r.pass = false;
            r.counterexamples.push_back(nodes[s]);
            r.counterexamples.push_back(nodes[t]);
        }
    }
    r.detail = std::to_string(pairs) + " unordered pairs (meeting is symmetric); search bound handle sum <= " +
               std::to_string(max_sum) + " + slack " + std::to_string(slack) + " = " + std::to_string(bound) +
               "; parameter shadow";
    return r;
}

}  // namespace

VerificationReport verify_properties(int max_sum, int threads) {
    if (max_sum < 1) {
        throw OutOfDomain("max_sum must be >= 1");
    }
    const auto nodes = enumerate_nodes(max_sum);
    VerificationReport report;
    report.max_sum = max_sum;
    report.slack = common_stabilization_slack(max_sum);
    report.properties.push_back(check_parity(nodes, max_sum));
    report.properties.push_back(check_balance(nodes, max_sum));
    report.properties.push_back(check_build_heegaard(nodes, max_sum));
    report.properties.push_back(check_unique_moveless(nodes, max_sum));
    report.properties.push_back(check_common_stabilization(nodes, max_sum, report.slack, threads));
    return report;
}

}  // namespace trisect
