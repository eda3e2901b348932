#pragma once

// Command-line front end: reduce, eval, verify, table.

#include <iosfwd>
#include <string>
#include <vector>

namespace tornheim {

/// args excludes the program name. Returns 0 on success, 1 on verification
/// failures, 2 on invalid arguments or divergent input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tornheim
