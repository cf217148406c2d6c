#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hlroots {

/// Runs the command line with args[0] the program name. Returns 0 on
/// success, 1 when a verification fails, 2 on usage or input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hlroots
