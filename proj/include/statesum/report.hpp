#pragma once
/// Library-level CLI driver, shared by the statesum binary and the CLI tests.
#include <iosfwd>
#include <string>
#include <vector>

#include "statesum/complex.hpp"

namespace statesum {

/// Executes one CLI invocation (without the program name).  Returns the exit
/// code: 0 success, 1 mathematical failure, 2 usage error, 3 budget refusal.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Resolves a complex spec (s4 | s4-cross | cp2 | rp3 | s3xs1:<layers> |
/// rp3xs1:<layers> | file:<path>).  Throws std::invalid_argument on unknown
/// specs.
OrderedTriangulation complex_from_spec(const std::string& spec);

}  // namespace statesum
