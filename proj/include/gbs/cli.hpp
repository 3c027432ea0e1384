#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gbs::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUndetected = 1;
inline constexpr int kUsageError = 2;
inline constexpr int kVerificationFailure = 3;

/// Runs one command. `args` excludes the program name. Data goes to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace gbs::cli
