#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace braidwalk::cli {

/// Exit codes of `run`.
inline constexpr int kSuccess = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kUsageError = 2;

/// Runs the command line `args` (program name first). Results go to `out`
/// unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace braidwalk::cli
