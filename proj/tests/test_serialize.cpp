#include <filesystem>
#include <numbers>
#include <variant>

#include "doctest.h"

#include "qfa/errors.hpp"
#include "qfa/exact_rotation.hpp"
#include "qfa/oracle.hpp"
#include "qfa/serialize.hpp"

using qfa::Machine;
using qfa::Mcqfa;
using qfa::UnaryDfa;

TEST_CASE("machine JSON round trip keeps every field") {
    SUBCASE("mcqfa") {
        const Mcqfa machine = qfa::to_mcqfa(qfa::RotationMachine{4});
        const Machine back = qfa::machine_from_json(qfa::to_json(machine));
        REQUIRE(std::holds_alternative<Mcqfa>(back));
        const auto& m = std::get<Mcqfa>(back);
        CHECK(m.num_states == machine.num_states);
        CHECK(m.initial_state == machine.initial_state);
        CHECK(m.accepting == machine.accepting);
        CHECK(m.unitaries.letter == machine.unitaries.letter);
        CHECK(m.unitaries.left_marker == machine.unitaries.left_marker);
        CHECK(m.unitaries.right_marker == machine.unitaries.right_marker);
    }
    SUBCASE("dfa") {
        const UnaryDfa machine{2, 5, {0, 3, 6}};
        const Machine back = qfa::machine_from_json(qfa::to_json(machine));
        REQUIRE(std::holds_alternative<UnaryDfa>(back));
        const auto& m = std::get<UnaryDfa>(back);
        CHECK(m.tail_len == 2);
        CHECK(m.cycle_len == 5);
        CHECK(m.accepting == std::set<std::uint32_t>{0, 3, 6});
    }
}

TEST_CASE("mcqfa parsing fills in the default start and accepting set") {
    const auto text = R"({"type":"mcqfa","num_states":2,
        "unitaries":{"lmark":[[1,0],[0,1]],"a":[[0,-1],[1,0]],"rmark":[[1,0],[0,1]]}})";
    const Machine machine = qfa::parse_machine(text);
    const auto& m = std::get<Mcqfa>(machine);
    CHECK(m.initial_state == 0);
    CHECK(m.accepting == std::set<std::size_t>{0});
}

TEST_CASE("parse_machine rejects malformed documents") {
    CHECK_THROWS_AS(qfa::parse_machine("not json"), qfa::ParseError);
    CHECK_THROWS_AS(qfa::parse_machine("[1,2,3]"), qfa::ParseError);
    CHECK_THROWS_AS(qfa::parse_machine(R"({"num_states":2})"), qfa::ParseError);
    CHECK_THROWS_AS(qfa::parse_machine(R"({"type":"pfa"})"), qfa::ParseError);
    CHECK_THROWS_AS(qfa::parse_machine(R"({"type":"dfa","tail_len":0})"), qfa::ParseError);
    CHECK_THROWS_AS(
        qfa::parse_machine(R"({"type":"dfa","tail_len":0,"cycle_len":2,"accepting":[-1]})"),
        qfa::ParseError);
    CHECK_THROWS_AS(qfa::parse_machine(R"({"type":"mcqfa","num_states":2,
        "unitaries":{"lmark":[[1,0],[0,1]],"a":[[1,0],[0]],"rmark":[[1,0],[0,1]]}})"),
                    qfa::ParseError);
}

TEST_CASE("parse_machine rejects well-formed but invalid machines") {
    // Shear matrix: parses fine, fails the unitarity invariant.
    CHECK_THROWS_AS(qfa::parse_machine(R"({"type":"mcqfa","num_states":2,
        "unitaries":{"lmark":[[1,0],[0,1]],"a":[[1,1],[0,1]],"rmark":[[1,0],[0,1]]}})"),
                    qfa::InvariantError);
    // Accepting state beyond the cycle.
    CHECK_THROWS_AS(qfa::parse_machine(R"({"type":"dfa","tail_len":0,"cycle_len":2,"accepting":[5]})"),
                    qfa::InvariantError);
    // Well-shaped matrix of the wrong dimension for the machine.
    CHECK_THROWS_AS(qfa::parse_machine(R"({"type":"mcqfa","num_states":2,
        "unitaries":{"lmark":[[1,0],[0,1]],"a":[[1,0]],"rmark":[[1,0],[0,1]]}})"),
                    qfa::InvariantError);
}

TEST_CASE("save_machine and load_machine round trip through a file") {
    const auto path = std::filesystem::temp_directory_path() / "qfa_roundtrip_machine.json";
    const Machine machine = UnaryDfa{1, 3, {2}};
    qfa::save_machine(machine, path);
    const Machine back = qfa::load_machine(path);
    CHECK(std::get<UnaryDfa>(back).cycle_len == 3);
    std::filesystem::remove(path);

    CHECK_THROWS_AS(qfa::load_machine("/nonexistent/machine.json"), qfa::ParseError);
}

TEST_CASE("search report JSON carries the deterministic fields") {
    const qfa::SearchReport report = qfa::min_dfa_search(2, 8);
    const auto doc = qfa::to_json(report);
    CHECK(doc["n"] == 2);
    CHECK(doc["max_states"] == 8);
    CHECK(doc["minimal_states"] == 4);
    CHECK(doc["machines_checked"] == 98);
    CHECK(doc["witness"]["type"] == "dfa");
    CHECK(doc["witness"]["cycle_len"] == 4);
    CHECK(doc["ms_per_size"].size() == 4);

    const qfa::SearchReport missing = qfa::min_dfa_search(16, 4);
    const auto empty = qfa::to_json(missing);
    CHECK(empty["minimal_states"].is_null());
    CHECK(empty["witness"].is_null());
}
