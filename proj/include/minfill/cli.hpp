#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace minfill {

/// Runs the command-line front end on the given arguments (program name
/// excluded). Returns the process exit code: 0 on success, 1 on domain
/// errors, 2 on usage errors. Identical inputs and flags produce
/// byte-identical stdout.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace minfill
