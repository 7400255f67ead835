#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fsmlab/fixtures.hpp"
#include "fsmlab/io.hpp"
#include "helpers.hpp"

using namespace fsmlab;
using nlohmann::json;
using fsmlab::testing::slurp;
using fsmlab::testing::word;

TEST_CASE("shipped machine files equal the built-in fixtures") {
    const auto eqabc = load_machine(std::string(FSMLAB_DATA_DIR) + "/eqabc.json");
    REQUIRE(eqabc.ok());
    CHECK(*eqabc.machine == fixtures::eqabc());
    const auto nd = load_machine(std::string(FSMLAB_DATA_DIR) + "/eqabc_nd.json");
    REQUIRE(nd.ok());
    CHECK(*nd.machine == fixtures::eqabc_nd());
}

TEST_CASE("machine JSON round-trips") {
    for (const auto& def : {fixtures::eqabc(), fixtures::eqabc_nd(), fsmlab::testing::tiny()}) {
        const auto back = machine_from_json(machine_to_json(def));
        REQUIRE(back.ok());
        CHECK(*back.machine == def);
    }
}

TEST_CASE("structural problems are Malformed diagnostics") {
    auto j = machine_to_json(fsmlab::testing::tiny());
    SUBCASE("not an object") {
        const auto r = machine_from_json(json::array());
        REQUIRE(r.diagnostics.size() == 1);
        CHECK(r.diagnostics[0].code == DiagnosticCode::Malformed);
    }
    SUBCASE("unknown key") {
        j["colour"] = "blue";
        const auto r = machine_from_json(j);
        REQUIRE_FALSE(r.ok());
        CHECK(r.diagnostics[0].locus == "colour");
    }
    SUBCASE("missing key") {
        j.erase("start");
        const auto r = machine_from_json(j);
        REQUIRE_FALSE(r.ok());
        CHECK(r.diagnostics[0].code == DiagnosticCode::Malformed);
        CHECK(r.diagnostics[0].locus == "start");
    }
    SUBCASE("wrong types") {
        j["tapes"] = "one";
        j["rules"][0]["read"] = json::array({1});
        const auto r = machine_from_json(j);
        REQUIRE_FALSE(r.ok());
        std::set<std::string> loci;
        for (const auto& d : r.diagnostics) {
            loci.insert(d.locus);
        }
        CHECK(loci.contains("tapes"));
        CHECK(loci.contains("rules[0].read[0]"));
    }
    SUBCASE("semantic problems come through too") {
        j["start"] = "nowhere";
        const auto r = machine_from_json(j);
        REQUIRE(r.diagnostics.size() == 1);
        CHECK(r.diagnostics[0].code == DiagnosticCode::BadStart);
    }
}

TEST_CASE("unreadable files") {
    const auto missing = load_machine("/nonexistent/machine.json");
    REQUIRE(missing.diagnostics.size() == 1);
    CHECK(missing.diagnostics[0].code == DiagnosticCode::Malformed);
}

TEST_CASE("diagnostics serialize with code, message and locus") {
    const auto j = diagnostics_to_json({{DiagnosticCode::BadStart, "bad", "start"}});
    CHECK(j == json::parse(R"([{"code":"BadStart","message":"bad","locus":"start"}])"));
}

TEST_CASE("trace JSON and listing") {
    const auto t = trace_accepting(fixtures::eqabc(), word("@ _"), 1, 100);
    REQUIRE(t);
    const auto j = trace_to_json(*t);
    REQUIRE(j.size() == 4);
    CHECK(j[0]["rule"].is_null());
    CHECK(j[0]["state"] == "S");
    CHECK(j[0]["heads"] == json::array({1, 0, 0, 0}));
    CHECK(j[3]["rule"]["to"] == "Y");
    CHECK(format_trace(*t) == "(S (1 0 0 0) ((@ _) (_) (_) (_)))\n"
                              "⊢ (C (2 1 1 1) ((@ _ _) (_ _) (_ _) (_ _)))\n"
                              "⊢ (G (2 0 0 0) ((@ _ _) (_ _) (_ _) (_ _)))\n"
                              "⊢ (Y (2 0 0 0) ((@ _ _) (_ _) (_ _) (_ _)))\n");
}

TEST_CASE("accepting listing for abc matches the golden") {
    const auto t = trace_accepting(fixtures::eqabc(), word("@ _ a b c"), 1, 1000);
    REQUIRE(t);
    CHECK(format_trace(*t) == slurp(std::string(FSMLAB_GOLDEN_DIR) + "/eqabc_abc_accept_trace.txt"));
}

TEST_CASE("split_word ignores extra whitespace") {
    CHECK(split_word("  @  _ a\tb ") == std::vector<std::string>{"@", "_", "a", "b"});
    CHECK(split_word("").empty());
}
