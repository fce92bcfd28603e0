#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace skewspec::cli {

/// Process exit codes shared by every subcommand.
enum ExitCode : int {
  kSuccess = 0,       // success / predicate true
  kFalseVerdict = 1,  // clean negative answer
  kInputError = 2,    // unreadable input, bad flags, precondition violated
  kInconsistent = 3,  // internal cross-check failed
};

/// Runs one CLI invocation. `args` excludes the program name. Reports go to
/// `out` as JSON, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace skewspec::cli
