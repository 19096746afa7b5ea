#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace chiac::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    success = 0,
    input_error = 1,
    verification_failure = 2,
};

/// Runs one command line (without the program name).
auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;

} // namespace chiac::cli
