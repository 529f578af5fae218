#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "trisect/core.hpp"

using namespace trisect;

namespace {

// Brute-force preimages of the genus formula, independent of the closed-form inverse.
std::map<Profile, std::vector<SurfaceGenera>> preimages(int max_genus, int max_b) {
    std::map<Profile, std::vector<SurfaceGenera>> out;
    for (int g12 = 0; g12 <= max_genus; ++g12)
        for (int g13 = 0; g13 <= max_genus; ++g13)
            for (int g23 = 0; g23 <= max_genus; ++g23)
                for (int b = 1; b <= max_b; ++b) {
                    Profile p{g12 + g13 + b - 1, g12 + g23 + b - 1, g13 + g23 + b - 1, b};
                    out[p].push_back({g12, g13, g23});
                }
    return out;
}

}  // namespace

TEST_CASE("profile from genera") {
    CHECK(profile_from_genera({0, 0, 0}, 1) == Profile{0, 0, 0, 1});
    CHECK(profile_from_genera({2, 0, 0}, 1) == Profile{2, 2, 0, 1});
    CHECK(profile_from_genera({0, 0, 1}, 2) == Profile{1, 2, 2, 2});
    CHECK(Profile{1, 2, 2, 2}.str() == "(1,2,2;2)");
}

TEST_CASE("genera from profile") {
    CHECK(genera_from_profile({0, 0, 0, 1}) == SurfaceGenera{0, 0, 0});
    CHECK(genera_from_profile({2, 2, 0, 1}) == SurfaceGenera{2, 0, 0});
    CHECK_FALSE(genera_from_profile({6, 3, 3, 3}).has_value());
    CHECK_THROWS_AS(state_from_profile({6, 3, 3, 3}), Infeasible);
}

TEST_CASE("feasibility examples") {
    CHECK(is_feasible({1, 1, 2, 1}));
    CHECK_FALSE(is_feasible({1, 1, 1, 1}));
    for (int h = 0; h <= 6; ++h)
        for (int b = 1; b <= 6; ++b)
            if ((h + b) % 2 == 0) CHECK_FALSE(is_feasible({h, h, h, b}));
}

TEST_CASE("inverse agrees with brute-force preimages") {
    const auto table = preimages(10, 8);
    int checked = 0;
    for (int h1 = 0; h1 <= 10; ++h1)
        for (int h2 = 0; h2 <= 10; ++h2)
            for (int h3 = 0; h3 <= 10; ++h3)
                for (int b = 1; b <= 8; ++b) {
                    const Profile p{h1, h2, h3, b};
                    const auto g = genera_from_profile(p);
                    const auto it = table.find(p);
                    if (it == table.end()) {
                        CHECK_FALSE(g.has_value());
                        CHECK_FALSE(is_feasible(p));
                    } else {
                        REQUIRE(it->second.size() == 1);
                        REQUIRE(g.has_value());
                        CHECK(*g == it->second.front());
                        CHECK(is_feasible(p));
                        CHECK(profile_from_genera(*g, b) == p);
                    }
                    ++checked;
                }
    CHECK(checked == 11 * 11 * 11 * 8);
}

TEST_CASE("euler identity holds for every state") {
    for (int g12 = 0; g12 <= 5; ++g12)
        for (int g13 = 0; g13 <= 5; ++g13)
            for (int g23 = 0; g23 <= 5; ++g23)
                for (int b = 1; b <= 5; ++b) {
                    const TrisectionState s({g12, g13, g23}, LinkComponentSet(b));
                    CHECK(s.euler_defect() == 0);
                    // Recompute by hand from the surfaces.
                    const Profile p = s.profile();
                    const int lhs = (1 - p.h1) + (1 - p.h2) + (1 - p.h3);
                    const int rhs = surface_euler_characteristic(g12, b) + surface_euler_characteristic(g13, b) +
                                    surface_euler_characteristic(g23, b);
                    CHECK(lhs == rhs);
                }
}

TEST_CASE("state validation") {
    CHECK_THROWS_AS(TrisectionState({-1, 0, 0}, LinkComponentSet(1)), Infeasible);
    CHECK(TrisectionState({0, 0, 0}, LinkComponentSet(1)).is_trivial());
    CHECK_FALSE(TrisectionState({0, 0, 0}, LinkComponentSet(2)).is_trivial());
    CHECK_THROWS(LinkComponentSet(0));
}

TEST_CASE("component labels") {
    CHECK(ComponentId::parse("c12").index == 12);
    CHECK(ComponentId{2} < ComponentId{10});
    CHECK_THROWS_AS(ComponentId::parse("x1"), FormatError);
    CHECK_THROWS_AS(ComponentId::parse("c"), FormatError);
    CHECK(ArcClass::parse("same:c0") == ArcClass::same(ComponentId{0}));
    CHECK(ArcClass::parse("distinct:c1,c2") == ArcClass::distinct(ComponentId{1}, ComponentId{2}));
    CHECK(ArcClass::distinct(ComponentId{1}, ComponentId{2}).str() == "distinct:c1,c2");
    CHECK_THROWS_AS(ArcClass::parse("distinct:c1"), FormatError);
}

TEST_CASE("link rewrites keep genealogy") {
    LinkComponentSet link(2);
    const auto kids = link.rewrite("stab", {ComponentId{0}}, 2);
    CHECK(kids == std::vector<ComponentId>{ComponentId{2}, ComponentId{3}});
    CHECK(link.size() == 3);
    CHECK_FALSE(link.contains(ComponentId{0}));
    const auto merged = link.rewrite("stab", {ComponentId{1}, ComponentId{3}}, 1);
    CHECK(merged == std::vector<ComponentId>{ComponentId{4}});
    CHECK(link.next_id() == 5);
    CHECK(link.genealogy_consistent());
    CHECK(link.genealogy().size() == 3);
}

TEST_CASE("handlebody helpers") {
    CHECK(complement(Handlebody::H2) == std::pair{Handlebody::H1, Handlebody::H3});
    CHECK_THROWS_AS(handlebody_from_index(4), OutOfDomain);
    SurfaceGenera g{1, 2, 3};
    CHECK(g.between(Handlebody::H3, Handlebody::H1) == 2);
    CHECK(g.opposite(Handlebody::H1) == 3);
    g.opposite(Handlebody::H3) += 4;
    CHECK(g.g12 == 5);
}
