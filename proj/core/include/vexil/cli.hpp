#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace vexil::cli {

/// Runs one CLI invocation. args excludes the program name. Deterministic:
/// identical inputs produce byte-identical output.
/// Exit codes: 0 success, 2 invalid input, 3 infeasible or empty locus
/// (the zero class is still printed, with a note on the error stream).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vexil::cli
