#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "trisect/catalogue.hpp"
#include "trisect/io.hpp"
#include "trisect/moves.hpp"

using namespace trisect;

namespace {

TrisectionState round_trip(const TrisectionState& s) { return io::state_from_json(io::parse(io::dump(io::to_json(s)))); }

}  // namespace

TEST_CASE("fresh state layout") {
    const auto j = io::to_json(from_heegaard(2));
    CHECK(io::dump(j) ==
          "{\n"
          "  \"version\": 1,\n"
          "  \"label\": \"from-heegaard(g=2)\",\n"
          "  \"genera\": {\n"
          "    \"g12\": 2,\n"
          "    \"g13\": 0,\n"
          "    \"g23\": 0\n"
          "  },\n"
          "  \"link\": {\n"
          "    \"components\": [\n"
          "      \"c0\"\n"
          "    ],\n"
          "    \"next_id\": 1\n"
          "  },\n"
          "  \"history\": []\n"
          "}\n");
}

TEST_CASE("states round trip with history") {
    auto s = koda_ozawa();
    CHECK(round_trip(s) == s);
    s = balance(from_heegaard(3)).state;
    CHECK(round_trip(s) == s);
    s = fake_heegaard_stab(split_heegaard(4, 2)).state;
    CHECK(round_trip(s) == s);
    s = apply_destabilization(koda_ozawa(), {Handlebody::H1, ArcClass::distinct(ComponentId{0}, ComponentId{1})});
    const auto back = round_trip(s);
    CHECK(back == s);
    CHECK(back.link().genealogy() == s.link().genealogy());
    CHECK(back.link().genealogy_consistent());
}

TEST_CASE("scripts round trip") {
    const auto script = balance(split_heegaard(5, 1)).script;
    CHECK(io::script_from_json(io::parse(io::dump(io::to_json(script)))) == script);
    const auto fake = fake_heegaard_stab(koda_ozawa()).script;
    CHECK(io::script_from_json(io::to_json(fake)) == fake);
    CHECK(io::dump(io::to_json(ArcClass::distinct(ComponentId{1}, ComponentId{2}))) ==
          "{\n  \"distinct\": [\n    \"c1\",\n    \"c2\"\n  ]\n}\n");
}

TEST_CASE("malformed documents") {
    auto j = io::to_json(from_heegaard(2));
    auto extra = j;
    extra["colour"] = "red";
    CHECK_THROWS_AS(io::state_from_json(extra), FormatError);

    auto missing = j;
    missing.erase("history");
    CHECK_THROWS_AS(io::state_from_json(missing), FormatError);

    auto version = j;
    version["version"] = 2;
    CHECK_THROWS_AS(io::state_from_json(version), FormatError);

    auto negative = j;
    negative["genera"]["g13"] = -1;
    CHECK_THROWS_AS(io::state_from_json(negative), FormatError);

    auto dup = j;
    dup["link"]["components"] = io::Json::array({"c0", "c0"});
    CHECK_THROWS_AS(io::state_from_json(dup), FormatError);

    CHECK_THROWS_AS(io::parse("{not json"), FormatError);
    CHECK_THROWS_AS(io::script_from_json(io::Json::object()), FormatError);

    auto rec = io::to_json(balance(from_heegaard(2)).script).at(0);
    rec["op"] = "twist";
    CHECK_THROWS_AS(io::record_from_json(rec), FormatError);
    rec["op"] = "stab";
    rec["note"] = 1;
    CHECK_THROWS_AS(io::record_from_json(rec), FormatError);
}

TEST_CASE("history inconsistent with the link is rejected") {
    const auto s = balance(from_heegaard(2)).state;
    auto j = io::to_json(s);
    j["link"]["components"] = io::Json::array({"c9"});
    CHECK_THROWS_AS(io::state_from_json(j), FormatError);

    auto k = io::to_json(s);
    k["history"][0]["created"] = io::Json::array({"c1"});
    CHECK_THROWS_AS(io::state_from_json(k), FormatError);
}

TEST_CASE("report formats") {
    const auto plan = plan_common_stabilization(from_heegaard(2), from_heegaard(2), 0);
    const auto j = io::to_json(plan);
    CHECK(j.at("final_profile") == io::Json::array({4, 10, 6, 1}));
    CHECK(j.at("a").at("steps").size() == 5);
    CHECK(j.at("a").at("steps").at("step1_balance").size() == 2);

    const auto v = io::to_json(verify_properties(4));
    CHECK(v.at("scope") == "parameter shadow");
    CHECK(v.at("properties").size() == 5);
    CHECK(v.at("properties").at(0).at("range").at("max_sum") == 4);
}
