#pragma once

#include "hypal/document.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace hypal::cli {

/// Exit codes shared by every command.
enum ExitCode : int {
  kSuccess = 0,     // valid / holds / computed
  kPropertyFails = 1,  // table invalid or property fails (report carries the witness)
  kInputError = 2,  // unreadable or malformed input, bad flags
};

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics and usage to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Re-checks every certificate embedded in a machine-readable report against
/// `t` using library calls: ppt certificates, Haar weights (invariance), means
/// and K points. Returns false and sets `why` on the first mismatch.
bool reverify_report(const Json& report, const ConvolutionTable& t, std::string* why = nullptr);

}  // namespace hypal::cli
