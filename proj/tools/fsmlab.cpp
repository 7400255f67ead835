#include <iostream>
#include <string>
#include <vector>

#include "fsmlab/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return fsmlab::cli::run(args, std::cout, std::cerr);
}
