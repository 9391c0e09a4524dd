#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rootposet {

// argv-style arguments without the program name. Returns the process exit
// code: 0 success, 1 verification failure, 2 usage error. Diagrams of rank
// above 8 are accepted with a warning on the error stream.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rootposet
