#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "fsmlab/io.hpp"
#include "fsmlab/machine.hpp"

namespace fsmlab::testing {

inline std::vector<std::string> word(const std::string& text) {
    return split_word(text);
}

inline std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

inline RawMachine tiny_raw() {
    RawMachine raw;
    raw.name = "tiny";
    raw.tapes = 1;
    raw.states = {"S", "Y", "N"};
    raw.alphabet = {"a"};
    raw.start = "S";
    raw.finals = {"Y", "N"};
    raw.accept = "Y";
    raw.rules = {{"S", {"a"}, "S", {"R"}}, {"S", {"_"}, "Y", {"_"}}, {"S", {"_"}, "N", {"_"}}};
    return raw;
}

inline MachineDef tiny() {
    return *validate_machine(tiny_raw()).machine;
}

}  // namespace fsmlab::testing
