#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace deficiency::cli {

enum ExitCode : int {
    kOk = 0,
    kFail = 1,       // a verification sweep found a counterexample
    kUsage = 2,      // bad flags, unparsable graph, parameters out of range
    kContract = 3,   // a proof-guaranteed object was missing
};

// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace deficiency::cli
