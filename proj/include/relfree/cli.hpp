#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace relfree {

// Runs one CLI invocation; `args` excludes the program name.  Returns the
// process exit status: 0 success, 1 domain error (message names the violated
// precondition), 2 parse error.  All output goes to the given streams, so the
// front end is testable in-process.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace relfree
