#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ptc {

// Runs the ptcalc command-line interface on the given arguments (program
// name excluded). Returns the process exit code: 0 on success, 1 on a
// mathematical or semantic failure, 2 on a parse or I/O failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ptc
