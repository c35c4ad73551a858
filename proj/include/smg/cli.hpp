#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace smg::cli {

/// Process exit codes.
enum ExitCode : int {
  kSolved = 0,
  kNoSolution = 1,
  kNotFound = 2,
  kInputError = 3,
  kBudgetExceeded = 4,
};

/// Runs the command line front end. args excludes the program name.
/// Instance arguments of "-" read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace smg::cli
