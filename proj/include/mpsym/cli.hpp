#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mpsym {

// Runs the command-line front end on the given arguments (without the program
// name) writing results to out and problems to err. Returns the process exit
// code: 0 success, 1 domain error (error name printed on err) or failed
// verification, 2 usage error.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mpsym
