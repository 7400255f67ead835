#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fsmlab::cli {

enum ExitCode : int {
    kSuccess = 0,
    kRejected = 1,
    kUnknown = 2,
    kInvalidMachine = 3,
    kUsage = 4,
};

/// Runs one command line (args[0] is the program name). `serve` blocks until
/// the server stops.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fsmlab::cli
