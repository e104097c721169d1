#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kpotent {

// Runs one command-line invocation (args excludes the program name) and
// writes the report to `out` / error text to `err`.  Returns the process
// exit status: 0 success, 1 domain failure or mismatch, 2 usage error.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kpotent
