#pragma once

#include <string>
#include <vector>

namespace relext {

struct RunResult {
    int status = 0;  // 0 ok, 1 input error, 2 math precondition, 3 internal
    std::string out; // emitted document
    std::string err; // diagnostics
};

// Full command-line entry point (argv without the program name).
// Subcommands: check, info, projectives, injectives, ext, extend, present,
// quiver. See README for flags.
RunResult run_command(const std::vector<std::string>& args);

} // namespace relext
