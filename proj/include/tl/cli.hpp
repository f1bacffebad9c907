#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tl {

// Runs the command-line frontend; output goes to `out`.  Returns the process
// exit code: 0 success/PASS, 1 usage, 2 infeasible configuration, 3 internal
// invariant violation.
int run_cli(const std::vector<std::string>& args, std::ostream& out);

}  // namespace tl
