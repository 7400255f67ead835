#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <sstream>

#include "dot_checker.hpp"
#include "fsmlab/cli.hpp"
#include "helpers.hpp"

using fsmlab::testing::slurp;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "fsmlab");
    std::ostringstream out;
    std::ostringstream err;
    const int code = fsmlab::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

const std::string kEqabc = std::string(FSMLAB_DATA_DIR) + "/eqabc.json";
const std::string kNd = std::string(FSMLAB_DATA_DIR) + "/eqabc_nd.json";

std::string golden(const std::string& name) {
    return slurp(std::string(FSMLAB_GOLDEN_DIR) + "/" + name);
}

}  // namespace

TEST_CASE("validate") {
    const auto ok = run({"validate", kEqabc});
    CHECK(ok.code == 0);
    CHECK(ok.out == "valid: EQABC (7 states, 10 rules, 4 tapes)\n");

    const auto tmp = std::filesystem::temp_directory_path() / "fsmlab-cli-bad.json";
    {
        std::ofstream(tmp) << R"({"name":"x","tapes":1,"states":["S"],"alphabet":["a"],"start":"Q","finals":[],"accept":"S","rules":[]})";
    }
    const auto bad = run({"validate", tmp.string()});
    CHECK(bad.code == 3);
    CHECK(bad.err == "BadStart at start: start state 'Q' is not a declared state\n"
                     "BadAccept at accept: accept state 'S' is not a final state\n");
    std::filesystem::remove(tmp);

    CHECK(run({"validate", "/nonexistent.json"}).code == 3);
}

TEST_CASE("apply exit codes") {
    CHECK(run({"apply", kEqabc, "--word", "@ _ a b c", "--head", "1"}).out == "accept\n");
    CHECK(run({"apply", kEqabc, "--word", "@ _ a b c", "--head", "1"}).code == 0);
    CHECK(run({"apply", kEqabc, "--word", "@ _ a a a", "--head", "1"}).code == 1);
    const auto unknown = run({"apply", kEqabc, "--word", "@ _ a b c", "--head", "1", "--threshold", "9"});
    CHECK(unknown.code == 2);
    CHECK(unknown.out == "unknown\n");
}

TEST_CASE("trace listings") {
    const auto acc = run({"trace", kEqabc, "--word", "@ _ a b c", "--head", "1"});
    CHECK(acc.code == 0);
    CHECK(acc.out == golden("eqabc_abc_accept_trace.txt"));
    CHECK(acc.err.empty());

    const auto rej = run({"trace", kEqabc, "--word", "@ _ a b", "--head", "1"});
    CHECK(rej.code == 1);
    CHECK(rej.err == "reject\n");
    CHECK(rej.out.find("(G (4 1 1 0) ((@ _ a b _) (_ a _) (_ b _) (_ _)))\n") != std::string::npos);

    const auto cut = run({"trace", kEqabc, "--word", "@ _ a b c", "--head", "1", "--threshold", "9"});
    CHECK(cut.code == 2);
    CHECK(cut.err == "unknown: 1 computation(s) cut off at 9 steps\n");
}

TEST_CASE("graph and phase subdiagrams") {
    CHECK(run({"graph", kEqabc}).out == golden("eqabc_full.dot"));
    CHECK(run({"graph", kEqabc, "--from-rules", "S:C", "--start", "S"}).out == golden("eqabc_phase1.dot"));
    CHECK(run({"graph", kEqabc, "--from-rules", "C:D,D:C,C:E,E:C,C:F,F:C", "--start", "C"}).out ==
          golden("eqabc_phase2.dot"));
    CHECK(run({"graph", kEqabc, "--states", "C,G,Y", "--start", "C"}).out == golden("eqabc_phase3.dot"));

    const auto bad = run({"graph", kEqabc, "--from-rules", "S:Y"});
    CHECK(bad.code == 4);
    CHECK(bad.err == "error: no rule goes from S to Y\n");
    CHECK(run({"graph", kEqabc, "--states", "S,C", "--start", "G"}).code == 4);
}

TEST_CASE("graph to a file") {
    const auto path = std::filesystem::temp_directory_path() / "fsmlab-cli-graph.dot";
    const auto r = run({"graph", kEqabc, "-o", path.string()});
    CHECK(r.code == 0);
    CHECK(slurp(path.string()) == golden("eqabc_full.dot"));
    std::filesystem::remove(path);
    CHECK(run({"graph", kEqabc, "--render", "svg"}).code == 4);
}

TEST_CASE("cmpgraph") {
    const auto rej = run({"cmpgraph", kEqabc, "--word", "@ _ a b", "--head", "1"});
    CHECK(rej.code == 1);
    CHECK(rej.out == golden("eqabc_ab_cmpgraph.dot"));
    const auto both = run({"cmpgraph", kNd, "--word", "_ b c a", "--head", "0", "--threshold", "8"});
    CHECK(both.code == 2);
    const auto g = fsmlab::testing::parse_dot(both.out);
    CHECK(g.nodes.at("G").at("fillcolor") == "gold");
    CHECK(g.nodes.at("G").at("color") == "crimson");
    CHECK(run({"cmpgraph", kNd, "--word", "_ b c a", "--head", "0", "--threshold", "10"}).code == 0);
}

TEST_CASE("usage errors exit with 4") {
    CHECK(run({}).code == 4);
    CHECK(run({"frobnicate"}).code == 4);
    CHECK(run({"apply", kEqabc, "--word", "@ _"}).code == 4);
    CHECK(run({"apply", kEqabc, "--word", "@ _", "--head", "9"}).code == 4);
    CHECK(run({"apply", kEqabc, "--word", "@ _ x", "--head", "1"}).code == 4);
    CHECK(run({"apply", kEqabc, "--word", "@ _", "--head", "1", "--threshold", "0"}).code == 4);
    const auto help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("cmpgraph") != std::string::npos);
}

TEST_CASE("the installed binary runs") {
    const std::string cmd = std::string("'") + FSMLAB_BINARY + "' apply '" + kEqabc + "' --word '@ _ a a a' --head 1";
    FILE* p = ::popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    char buf[64] = {};
    const auto n = std::fread(buf, 1, sizeof buf - 1, p);
    const int status = ::pclose(p);
    CHECK(std::string(buf, n) == "reject\n");
    REQUIRE(WIFEXITED(status));
    CHECK(WEXITSTATUS(status) == 1);
}
