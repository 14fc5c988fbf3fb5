#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace treecolor::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerdictFalse = 1,
  kUsageError = 2,
  kCapacityError = 3,
};

/// Runs one command line (without the program name). Errors are reported as
/// a single "error: <kind>: <message>" line on `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace treecolor::cli
