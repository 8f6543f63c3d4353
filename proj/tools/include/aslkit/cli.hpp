#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace aslkit::cli {

/// Exit statuses of `run`.
inline constexpr int kSuccess = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kUsageError = 2;

/// Runs one command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, char** argv);

}  // namespace aslkit::cli
