#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polyhull {

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`. Returns the process exit status: 0/1 for boolean
/// answers and success, 2 for usage, parse and dimension errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace polyhull
