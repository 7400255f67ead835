#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "dot_checker.hpp"
#include "fsmlab/diagram.hpp"
#include "fsmlab/fixtures.hpp"
#include "helpers.hpp"

using namespace fsmlab;
using fsmlab::testing::parse_dot;
using fsmlab::testing::slurp;

namespace {

std::string golden(const std::string& name) {
    return slurp(std::string(FSMLAB_GOLDEN_DIR) + "/" + name);
}

std::vector<std::size_t> rules_between(const MachineDef& def, const std::set<std::pair<std::string, std::string>>& pairs) {
    std::vector<std::size_t> out;
    for (std::size_t r = 0; r < def.rules.size(); ++r) {
        if (pairs.contains({def.rules[r].from, def.rules[r].to})) {
            out.push_back(r);
        }
    }
    return out;
}

std::size_t label_entries(const testing::DotGraph& g) {
    std::size_t n = 0;
    for (const auto& e : g.edges) {
        const auto& label = e.attrs.at("label");
        n += static_cast<std::size_t>(std::count(label.begin(), label.end(), '['));
    }
    return n;
}

}  // namespace

TEST_CASE("state varieties") {
    const auto def = fsmlab::testing::tiny();
    CHECK(state_variety(def, "S") == StateVariety::Ordinary);
    CHECK(state_variety(def, "Y") == StateVariety::AcceptingFinal);
    CHECK(state_variety(def, "N") == StateVariety::RejectingFinal);
}

TEST_CASE("diagram edges group rules by endpoint pair") {
    const auto def = fixtures::eqabc_nd();
    std::vector<std::size_t> all(def.rules.size());
    std::iota(all.begin(), all.end(), 0);
    const auto edges = diagram_edges(def, all);
    REQUIRE(edges.size() == 7);
    CHECK(edges[0].from == "S");
    CHECK(edges[0].to == "C");
    CHECK(edges[2].entries.size() == 9);
}

TEST_CASE("EQABC full diagram matches its golden and has 7 nodes and 10 edges") {
    const auto def = fixtures::eqabc();
    const auto text = render_transition_diagram(def);
    CHECK(text == golden("eqabc_full.dot"));
    const auto g = parse_dot(text);
    CHECK(g.nodes.size() == 7);
    CHECK(g.edges.size() == 10);
    CHECK(label_entries(g) == def.rules.size());
    CHECK(g.nodes.at("S").at("fillcolor") == "green");
    CHECK(g.nodes.at("Y").at("shape") == "doubleoctagon");
}

TEST_CASE("EQABC phase diagrams match their goldens") {
    const auto def = fixtures::eqabc();
    struct Phase {
        const char* file;
        std::set<std::string> states;
        std::set<std::pair<std::string, std::string>> pairs;
        const char* start;
        std::size_t edges;
    };
    const Phase phases[] = {
        {"eqabc_phase1.dot", {"S", "C"}, {{"S", "C"}}, "S", 1},
        {"eqabc_phase2.dot", {"C", "D", "E", "F"},
         {{"C", "D"}, {"D", "C"}, {"C", "E"}, {"E", "C"}, {"C", "F"}, {"F", "C"}}, "C", 6},
        {"eqabc_phase3.dot", {"C", "G", "Y"}, {{"C", "G"}, {"G", "G"}, {"G", "Y"}}, "C", 3},
    };
    for (const auto& p : phases) {
        CAPTURE(p.file);
        const auto text = render_subdiagram(def, p.states, rules_between(def, p.pairs), std::string(p.start));
        CHECK(text == golden(p.file));
        const auto g = parse_dot(text);
        CHECK(g.nodes.size() == p.states.size());
        CHECK(g.edges.size() == p.edges);
        for (const auto& [name, attrs] : g.nodes) {
            CHECK((attrs.contains("fillcolor") == (name == p.start)));
        }
    }
}

TEST_CASE("identity subdiagram equals the full diagram") {
    for (const auto& def : {fixtures::eqabc(), fixtures::eqabc_nd()}) {
        const std::set<std::string> all(def.states.begin(), def.states.end());
        const auto text = render_subdiagram(def, all, [](const TransitionRule&) { return true; }, def.start);
        CHECK(text == render_transition_diagram(def));
    }
}

TEST_CASE("subdiagram arguments are checked") {
    const auto def = fixtures::eqabc();
    CHECK_THROWS_AS(render_subdiagram(def, {"S", "Q"}, std::vector<std::size_t>{}, std::nullopt), SubsetViolation);
    CHECK_THROWS_AS(render_subdiagram(def, {"S"}, std::vector<std::size_t>{}, std::string("C")), SubsetViolation);
    CHECK_THROWS_AS(render_subdiagram(def, {"S"}, std::vector<std::size_t>{0}, std::nullopt), SubsetViolation);
    CHECK_THROWS_AS(render_subdiagram(def, {"S", "C"}, std::vector<std::size_t>{99}, std::nullopt), SubsetViolation);
}

TEST_CASE("nondeterministic labels are stacked") {
    const auto text = render_transition_diagram(fixtures::eqabc_nd());
    CHECK(text.find("S -> C [label=\"[(_ _ _ _) (R R R R)]\"];") != std::string::npos);
    CHECK(text.find("[(_ a b c) (_ L L L)],\\n[(_ a c b) (_ L L L)]") != std::string::npos);
    CHECK_NOTHROW(parse_dot(text));
}
