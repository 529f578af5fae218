#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "trisect/catalogue.hpp"
#include "trisect/explorer.hpp"
#include "trisect/moves.hpp"
#include "trisect/planner.hpp"

using namespace trisect;

namespace {

// Reachability computed with the labeled engine, projected to nodes.
std::map<MoveGraphNode, int> labeled_bfs(const TrisectionState& start, int max_sum) {
    std::map<MoveGraphNode, int> depth{{node_of(start), 0}};
    std::vector<TrisectionState> frontier{start};
    for (int d = 1; !frontier.empty(); ++d) {
        std::vector<TrisectionState> next;
        for (const auto& s : frontier) {
            for (const auto& m : legal_moves(s)) {
                auto t = apply_stabilization(s, m);
                const auto n = node_of(t);
                if (n.handle_sum() > max_sum || depth.contains(n)) continue;
                depth.emplace(n, d);
                next.push_back(state_of(n));
            }
        }
        frontier = std::move(next);
    }
    return depth;
}

}  // namespace

TEST_CASE("node basics") {
    const MoveGraphNode n{1, 1, 1, 1};
    CHECK(n.handle_sum() == 6);
    CHECK(n.profile() == Profile{2, 2, 2, 1});
    CHECK(node_from_profile({2, 2, 2, 1}) == n);
    CHECK_FALSE(node_from_profile({1, 1, 1, 1}).has_value());
    CHECK(node_of(koda_ozawa()) == MoveGraphNode{0, 0, 1, 2});
    CHECK(canonical_under_relabeling({3, 0, 1, 1}) == MoveGraphNode{0, 1, 3, 1});
}

TEST_CASE("successors match the labeled engine") {
    for (const auto& n : enumerate_nodes(14)) {
        std::set<MoveGraphNode> mine;
        for (const auto& [move, next] : successors(n)) mine.insert(next);
        std::set<MoveGraphNode> engine;
        for (const auto& m : legal_moves(state_of(n))) engine.insert(node_of(apply_stabilization(state_of(n), m)));
        CHECK(mine == engine);
        for (const auto& next : mine) CHECK(next.handle_sum() == n.handle_sum() + 1);
    }
}

TEST_CASE("bfs examples") {
    for (int m = 0; m <= 10; ++m) {
        const auto r = bfs_reachable({0, 0, 0, 1}, m);
        CHECK(r.depth.size() == 1);
    }
    const auto genus_two = bfs_reachable({2, 0, 0, 1}, 6);
    REQUIRE(genus_two.contains({1, 1, 1, 1}));
    CHECK(genus_two.depth.at({1, 1, 1, 1}) == 2);

    const auto ko = bfs_reachable({0, 0, 1, 2}, 6);
    REQUIRE(ko.contains({1, 1, 1, 1}));
    CHECK(ko.depth.at({1, 1, 1, 1}) == 1);

    CHECK_THROWS_AS(bfs_reachable({1, 1, 1, 1}, 5), OutOfDomain);
}

TEST_CASE("bfs agrees with the labeled engine and layers are exact") {
    for (const auto& start : enumerate_nodes(6)) {
        const int bound = 11;
        const auto r = bfs_reachable(start, bound);
        CHECK(r.depth == labeled_bfs(state_of(start), bound));
        // Re-expansion certificate: layer k+1 is exactly the new successors of layer k.
        std::set<MoveGraphNode> seen{start};
        for (std::size_t k = 0; k + 1 < r.layers.size(); ++k) {
            std::set<MoveGraphNode> next;
            for (const auto& n : r.layers[k])
                for (const auto& [mv, t] : successors(n))
                    if (t.handle_sum() <= bound && !seen.contains(t)) next.insert(t);
            CHECK(std::vector<MoveGraphNode>(next.begin(), next.end()) == r.layers[k + 1]);
            seen.insert(next.begin(), next.end());
        }
        for (const auto& [n, d] : r.depth) CHECK(d == n.handle_sum() - start.handle_sum());
    }
}

TEST_CASE("quotient by relabeling") {
    const auto full = bfs_reachable({2, 0, 0, 1}, 10);
    const auto quot = bfs_reachable({2, 0, 0, 1}, 10, ExploreOptions{true});
    std::set<MoveGraphNode> images;
    for (const auto& [n, d] : full.depth) images.insert(canonical_under_relabeling(n));
    std::set<MoveGraphNode> keys;
    for (const auto& [n, d] : quot.depth) keys.insert(n);
    CHECK(images == keys);
}

TEST_CASE("shortest scripts") {
    const auto same = shortest_script({1, 1, 1, 1}, {1, 1, 1, 1}, 4);
    REQUIRE(same.has_value());
    CHECK(same->empty());

    const auto genus_two = shortest_script({2, 0, 0, 1}, {1, 1, 1, 1}, 4);
    REQUIRE(genus_two.has_value());
    CHECK(genus_two->size() == 2);
    CHECK(node_of(replay(state_of({2, 0, 0, 1}), *genus_two)) == MoveGraphNode{1, 1, 1, 1});

    CHECK_FALSE(shortest_script({1, 1, 1, 1}, {2, 0, 0, 1}, 10).has_value());
    CHECK_FALSE(shortest_path({1, 1, 1, 1}, {2, 0, 0, 1}, 10).has_value());
    CHECK_FALSE(shortest_script({2, 0, 0, 1}, {1, 1, 1, 1}, 1).has_value());
}

TEST_CASE("common stabilization search") {
    const MoveGraphNode a{2, 0, 0, 1};
    const MoveGraphNode b{0, 0, 1, 2};
    const auto same = common_stabilization_search(a, a, 8);
    REQUIRE(same.has_value());
    CHECK(same->node == a);
    CHECK(same->script_a.empty());
    CHECK(same->script_b.empty());

    const auto hit = common_stabilization_search(a, b, 8);
    REQUIRE(hit.has_value());
    CHECK(hit->node.handle_sum() <= 8);
    CHECK(node_of(replay(state_of(a), hit->script_a)) == hit->node);
    CHECK(node_of(replay(state_of(b), hit->script_b)) == hit->node);

    CHECK_FALSE(common_stabilization_search({0, 0, 0, 1}, a, 20).has_value());
    CHECK_FALSE(common_stabilization_search(b, {0, 0, 0, 1}, 20).has_value());
}

TEST_CASE("slack is tight") {
    for (int g = 1; g <= 5; ++g) {
        const MoveGraphNode a{0, 0, g, 1};
        const MoveGraphNode b{0, g, 0, 1};
        const auto hit = common_stabilization_search(a, b, 10 * g);
        REQUIRE(hit.has_value());
        CHECK(hit->node.handle_sum() == 3 * g);
        const int max_sum = 2 * g;
        CHECK(max_sum + common_stabilization_slack(max_sum) >= 3 * g);
    }
}

TEST_CASE("verification at small scale") {
    const auto report = verify_properties(6);
    CHECK(report.all_pass());
    CHECK(report.properties.size() == 5);
    for (const auto& p : report.properties) {
        CHECK(p.pass);
        CHECK(p.counterexamples.empty());
    }
    CHECK(report.slack == 3);
}

TEST_CASE("thread count does not change the report") {
    const auto one = verify_properties(12, 1);
    const auto four = verify_properties(12, 4);
    REQUIRE(one.properties.size() == four.properties.size());
    for (std::size_t i = 0; i < one.properties.size(); ++i) {
        CHECK(one.properties[i].pass == four.properties[i].pass);
        CHECK(one.properties[i].detail == four.properties[i].detail);
    }
}

TEST_CASE("enumeration") {
    const auto nodes = enumerate_nodes(6);
    for (const auto& n : nodes) CHECK(n.handle_sum() <= 6);
    CHECK(std::is_sorted(nodes.begin(), nodes.end()));
    // (g12,g13,g23;b) with 2*sum(g) + 3b - 3 <= 6: b=1 gives sum(g) <= 3, b=2 gives sum(g) <= 1, b=3 gives 0.
    CHECK(nodes.size() == 20 + 4 + 1);
}
