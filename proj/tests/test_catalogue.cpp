#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "trisect/catalogue.hpp"

using namespace trisect;

TEST_CASE("catalogue quadruples") {
    CHECK(trivial().profile() == Profile{0, 0, 0, 1});
    CHECK(from_heegaard(2).genera() == SurfaceGenera{2, 0, 0});
    CHECK(open_book(1).genera() == SurfaceGenera{1, 1, 1});
    CHECK(split_heegaard(4, 2).profile() == Profile{4, 2, 2, 1});
    CHECK(split_heegaard(4, 2).genera() == SurfaceGenera{2, 2, 0});
    CHECK(tunnel_system(1).genera() == SurfaceGenera{0, 1, 1});
    CHECK(connect_sum_equal_genus(1).profile() == Profile{1, 1, 1, 2});
    CHECK(surface_bundle(2).profile() == Profile{4, 3, 3, 1});
    CHECK(surface_bundle(2).genera() == SurfaceGenera{2, 2, 1});
    CHECK(surface_bundle(3).profile() == Profile{6, 4, 4, 3});
    CHECK(surface_bundle(3).genera() == SurfaceGenera{2, 2, 0});
    CHECK(koda_ozawa().profile() == Profile{1, 2, 2, 2});
    CHECK(koda_ozawa().genera() == SurfaceGenera{0, 0, 1});
}

TEST_CASE("families over parameter sweeps") {
    for (int g = 0; g <= 6; ++g) {
        CHECK(from_heegaard(g).profile() == Profile{g, g, 0, 1});
        CHECK(open_book(g).profile() == Profile{2 * g, 2 * g, 2 * g, 1});
        CHECK(tunnel_system(g).profile() == Profile{1, g, g + 1, 1});
        CHECK(connect_sum_equal_genus(g).profile() == Profile{g, g, g, g + 1});
        CHECK(connect_sum_equal_genus(g).genera() == SurfaceGenera{0, 0, 0});
        for (int h = 0; h <= g; ++h) CHECK(split_heegaard(g, h).profile() == Profile{g, h, g - h, 1});
    }
    for (int g = 1; g <= 9; ++g) {
        const int b = g % 2 == 0 ? 1 : 3;
        CHECK(surface_bundle(g).profile() == Profile{2 * g, g + 1, g + 1, b});
    }
}

TEST_CASE("fresh states") {
    const auto s = surface_bundle(3);
    CHECK(s.history().empty());
    CHECK(s.b() == 3);
    CHECK(s.link().next_id() == 3);
    CHECK(s.label() == "surface-bundle(fiber_genus=3)");
}

TEST_CASE("out of domain parameters") {
    CHECK_THROWS_AS(from_heegaard(-1), OutOfDomain);
    CHECK_THROWS_AS(split_heegaard(2, 3), OutOfDomain);
    CHECK_THROWS_AS(split_heegaard(2, -1), OutOfDomain);
    CHECK_THROWS_AS(surface_bundle(0), OutOfDomain);
    CHECK_THROWS_AS(tunnel_system(-2), OutOfDomain);
}

TEST_CASE("dispatch by name") {
    for (const auto kind : {ConstructorKind::Trivial, ConstructorKind::FromHeegaard, ConstructorKind::SplitHeegaard,
                            ConstructorKind::OpenBook, ConstructorKind::TunnelSystem, ConstructorKind::ConnectSum,
                            ConstructorKind::SurfaceBundle, ConstructorKind::KodaOzawa}) {
        CHECK(constructor_from_name(constructor_name(kind)) == kind);
    }
    CHECK_FALSE(constructor_from_name("lens").has_value());
    const std::vector<int> params{5, 2};
    CHECK(construct(ConstructorKind::SplitHeegaard, params).profile() == Profile{5, 2, 3, 1});
    CHECK_THROWS(construct(ConstructorKind::FromHeegaard, params));
}

TEST_CASE("construction notes") {
    const auto odd = construction_notes(surface_bundle(5).label());
    REQUIRE(odd.size() == 1);
    CHECK(odd.front().find("(10,6,6;3)") != std::string::npos);
    CHECK(construction_notes(surface_bundle(4).label()).empty());
    CHECK_FALSE(construction_notes(koda_ozawa().label()).empty());
    CHECK(construction_notes(from_heegaard(2).label()).empty());
}
