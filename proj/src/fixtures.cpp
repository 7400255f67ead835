#include "fsmlab/fixtures.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace fsmlab::fixtures {

namespace {

RawRule rule(std::string from, std::vector<std::string> read, std::string to, std::vector<std::string> actions) {
    return RawRule{std::move(from), std::move(read), std::move(to), std::move(actions)};
}

MachineDef checked(const RawMachine& raw) {
    auto result = validate_machine(raw);
    if (!result.ok()) {
        throw std::logic_error("built-in fixture " + raw.name + " is invalid: " + to_string(result.diagnostics.front()));
    }
    return std::move(*result.machine);
}

}  // namespace

MachineDef eqabc() {
    RawMachine raw;
    raw.name = "EQABC";
    raw.tapes = 4;
    raw.states = {"S", "Y", "C", "D", "E", "F", "G"};
    raw.alphabet = {"a", "b", "c"};
    raw.start = "S";
    raw.finals = {"Y"};
    raw.accept = "Y";
    raw.rules = {
        rule("S", {"_", "_", "_", "_"}, "C", {"R", "R", "R", "R"}),
        rule("C", {"a", "_", "_", "_"}, "D", {"a", "a", "_", "_"}),
        rule("D", {"a", "a", "_", "_"}, "C", {"R", "R", "_", "_"}),
        rule("C", {"b", "_", "_", "_"}, "E", {"b", "_", "b", "_"}),
        rule("E", {"b", "_", "b", "_"}, "C", {"R", "_", "R", "_"}),
        rule("C", {"c", "_", "_", "_"}, "F", {"c", "_", "_", "c"}),
        rule("F", {"c", "_", "_", "c"}, "C", {"R", "_", "_", "R"}),
        rule("C", {"_", "_", "_", "_"}, "G", {"_", "L", "L", "L"}),
        rule("G", {"_", "_", "_", "_"}, "Y", {"_", "_", "_", "_"}),
        rule("G", {"_", "a", "b", "c"}, "G", {"_", "L", "L", "L"}),
    };
    return checked(raw);
}

MachineDef eqabc_nd() {
    RawMachine raw;
    raw.name = "EQABC-ND";
    raw.tapes = 4;
    raw.states = {"S", "Y", "C", "D", "G"};
    raw.alphabet = {"a", "b", "c"};
    raw.start = "S";
    raw.finals = {"Y"};
    raw.accept = "Y";
    raw.rules.push_back(rule("S", {"_", "_", "_", "_"}, "C", {"R", "R", "R", "R"}));
    raw.rules.push_back(rule("S", {"_", "_", "_", "_"}, "G", {"R", "R", "R", "R"}));
    // Copy the letter under head 0 to auxiliary tape k, then advance heads 0 and k.
    for (const std::string letter : {"a", "b", "c"}) {
        for (std::size_t k = 1; k <= 3; ++k) {
            std::vector<std::string> written{letter, "_", "_", "_"};
            written[k] = letter;
            std::vector<std::string> advance{"R", "_", "_", "_"};
            advance[k] = "R";
            raw.rules.push_back(rule("C", {letter, "_", "_", "_"}, "D", written));
            raw.rules.push_back(rule("D", written, "C", advance));
        }
    }
    raw.rules.push_back(rule("C", {"_", "_", "_", "_"}, "G", {"_", "L", "L", "L"}));
    std::array<std::string, 3> letters{"a", "b", "c"};
    do {
        raw.rules.push_back(rule("G", {"_", letters[0], letters[1], letters[2]}, "G", {"_", "L", "L", "L"}));
    } while (std::next_permutation(letters.begin(), letters.end()));
    raw.rules.push_back(rule("G", {"_", "_", "_", "_"}, "Y", {"_", "_", "_", "_"}));
    return checked(raw);
}

}  // namespace fsmlab::fixtures
