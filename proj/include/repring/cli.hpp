#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace repring::cli {

// Runs one command line (without the program name). Output goes to `out`,
// diagnostics to `err`. Exit codes: 0 success, 1 domain error, 2 internal
// invariant violation.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace repring::cli
