#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace admg {

// Command-line front end.  args excludes the program name.  Returns the
// process exit code: 0 success, 1 domain error (cycle, not ancestral, file
// contents, failed verification), 2 usage error (bad flags, unknown labels).
// All output is byte-deterministic given the inputs and seeds.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace admg
