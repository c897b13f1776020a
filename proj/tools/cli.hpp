#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace boolfn {

/// Runs one command line (without the program name) against the given
/// streams. Exit codes: 0 success, 1 verification failure (a separation
/// inequality or construction guarantee did not hold), 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace boolfn
