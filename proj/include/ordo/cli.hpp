#ifndef ORDO_CLI_HPP
#define ORDO_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ordo::cli {

// Runs one CLI invocation. args excludes the program name. Returns the
// process exit code: 0 feasible/valid, 1 infeasible/invalid, 2 usage or
// input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ordo::cli

#endif
