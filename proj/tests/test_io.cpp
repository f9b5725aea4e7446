#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stellar/connectivity.hpp"
#include "stellar/generators.hpp"
#include "stellar/io.hpp"
#include "test_support.hpp"

using namespace stellar;

TEST_CASE("facet text parsing") {
    Complex path = parse_complex("1 2\n2 3\n");
    CHECK(path.facets() == std::vector<Face>{Face{1, 2}, Face{2, 3}});
    CHECK(serialize_complex(path) == "1 2\n2 3\n");

    Complex tri = parse_complex("# comment\n1 2 3\n");
    CHECK(tri.facets() == std::vector<Face>{Face{1, 2, 3}});

    Complex with_blank = parse_complex("\n1 2\n\n   \n2 3\n");
    CHECK(with_blank == path);

    CHECK(parse_complex("").is_empty());
}

TEST_CASE("facet text parse errors carry line numbers") {
    try {
        parse_complex("1 2\n1 1 2\n");
        FAIL("expected MalformedInputError");
    } catch (const MalformedInputError& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
    try {
        parse_complex("1 x\n");
        FAIL("expected MalformedInputError");
    } catch (const MalformedInputError& e) {
        CHECK(std::string(e.what()).find("line 1") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_complex("-3 4\n"), MalformedInputError);
}

TEST_CASE("parse-serialize round trip is the identity on canonical text") {
    Rng rng(404);
    for (int trial = 0; trial < 25; ++trial) {
        Complex c = gen::random_complex(rng, 8, 3, 7);
        if (c.is_void()) continue;
        std::string text = serialize_complex(c);
        CHECK(parse_complex(text) == c);
        CHECK(serialize_complex(parse_complex(text)) == text);
    }
    CHECK_THROWS_AS(serialize_complex(Complex::from_facets({Face{}})), MalformedInputError);
}

TEST_CASE("move records serialize with fixed fields") {
    Move sub = Move::edge_subdiv(Face{1, 2}, 7);
    CHECK(move_to_json(sub).dump() == R"({"kind":"edge_subdivision","face":[1,2],"new":7})");

    Move inv = Move::inverse_edge_subdiv(7, Face{1, 2});
    CHECK(move_to_json(inv).dump() ==
          R"({"kind":"inverse_edge_subdivision","removed":7,"edge":[1,2]})");

    Move con = Move::contraction(Face{3, 4}, 9);
    CHECK(move_to_json(con).dump() == R"({"kind":"contraction","face":[3,4],"new":9})");

    Move st = Move::stellar(Face{1, 2, 3}, 8);
    CHECK(move_to_json(st).dump() ==
          R"({"kind":"stellar_subdivision","face":[1,2,3],"new":8})");

    for (const Move& m : {sub, inv, con, st}) {
        CHECK(move_from_json(move_to_json(m)) == m);
    }
    CHECK_THROWS_AS(move_from_json(Json{{"kind", "bogus"}}), MalformedInputError);
}

TEST_CASE("sequence JSON round trip") {
    MoveSequence seq = MoveSequence::single(octahedral_sphere(3));
    seq.push(Move::inverse_edge_subdiv(1, Face{2, 5}));
    seq.push(Move::edge_subdiv(Face{2, 5}, 7));

    Json j = sequence_to_json(seq);
    MoveSequence back = sequence_from_json(j);
    CHECK(back.complexes == seq.complexes);
    CHECK(back.moves == seq.moves);

    // deserialization validates
    Json broken = j;
    broken["moves"][1]["new"] = 99;
    CHECK_THROWS_AS(sequence_from_json(broken), MalformedInputError);
}

TEST_CASE("plan JSON round trip") {
    Complex tri = Complex::from_facets({Face{1, 2, 3}});
    BacktrackPlan plan = plan_backtrack(tri);
    Json j = plan_to_json(plan);
    CHECK(j.is_array());
    CHECK(j.size() == 4);
    for (const auto& step : j) {
        CHECK(step.contains("edge"));
        CHECK(step.contains("new"));
        CHECK(step.contains("face"));
    }
    BacktrackPlan back = plan_from_json(j, tri);
    CHECK(back.steps.size() == plan.steps.size());
    for (size_t i = 0; i < plan.steps.size(); ++i) {
        CHECK(back.steps[i] == plan.steps[i]);
    }
}

TEST_CASE("invariants JSON") {
    Json j = invariants_to_json(octahedral_sphere(3));
    CHECK(j["f"] == Json::array({1, 6, 12, 8}));
    CHECK(j["gamma1"] == 0);
    CHECK(j["gamma2"] == 0);
    CHECK(j["flag"] == true);
    CHECK(j["missing_faces"].size() == 3);

    Json tri = invariants_to_json(cycle_complex(3));
    CHECK(tri["flag"] == false);
    CHECK(tri["missing_faces"] == Json::array({Json::array({1, 2, 3})}));
}
