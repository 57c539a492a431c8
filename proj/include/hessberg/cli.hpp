#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hessberg::cli {

// Parses and dispatches one command line (without the program name).
// Returns the process exit code: 0 success, 1 input error, 2 property
// violation. All normal output goes to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hessberg::cli
