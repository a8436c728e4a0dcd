#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace prelie2 {

// Exit codes: 0 valid, 1 mathematical violation, 2 usage, I/O or schema error.
enum ExitCode : int { kExitValid = 0, kExitViolation = 1, kExitSchema = 2 };

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

// Targets accepted by `construct`, with the input kinds each one accepts.
std::vector<std::string> construct_targets();

}  // namespace prelie2
