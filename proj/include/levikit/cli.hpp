#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "levikit/error.hpp"

namespace levikit::cli {

/// Exit codes: 0 success, 1 input validation failure, 2 theorem-hypothesis failure,
/// 3 I/O or parse error, 4 internal inconsistency.
int exit_code(ErrorKind kind);

/// Runs one command. args excludes the program name. Reports go to out (or the --output
/// file); diagnostics go to err. Output is a pure function of the arguments and input files.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace levikit::cli
