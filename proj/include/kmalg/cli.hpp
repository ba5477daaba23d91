#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kmalg::cli {

/// Process exit statuses.
enum Exit : int {
  kOk = 0,        // success, admissible, valid
  kFailed = 1,    // well-formed input, failing check
  kInputError = 2,
  kInternal = 3,  // a closure guarantee broke
};

/// Runs one invocation. `args` excludes the program name. DSL input comes
/// from the file arguments, or from `in` when there are none.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace kmalg::cli
