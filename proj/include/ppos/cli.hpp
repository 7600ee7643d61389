#pragma once

#include <string>
#include <vector>

namespace ppos {

// Parses and executes one invocation; args excludes the program name.
// Returns the process exit code: 0 = all checks pass, 1 = at least one
// verification mismatch, 2 = usage or domain error.
int run_cli(const std::vector<std::string>& args);

}  // namespace ppos
