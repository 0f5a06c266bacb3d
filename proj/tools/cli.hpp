#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace progressio::cli {

/// Exit codes: 0 success, 1 the mathematics said no, 2 usage error.
inline constexpr int kOk = 0;
inline constexpr int kMathFailure = 1;
inline constexpr int kUsage = 2;

/// Runs one command line (args excludes the program name). Results go to
/// `out` unless -o is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace progressio::cli
