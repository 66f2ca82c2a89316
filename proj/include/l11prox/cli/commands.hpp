#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace l11prox::cli {

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // verification mismatch
inline constexpr int kExitUsage = 2;    // bad flags or unreadable input

/// Runs the command line `args` (without the program name), e.g.
/// {"prox", "--input", "x.csv", "--lambda", "2.1"}. Results go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace l11prox::cli
