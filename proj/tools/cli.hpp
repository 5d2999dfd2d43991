#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace normgate::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kRuntimeError = 1;
inline constexpr int kUsageError = 2;
inline constexpr int kNotCondB = 3;
inline constexpr int kInconclusive = 4;
inline constexpr int kNotAttains = 5;
inline constexpr int kUnknown = 6;

/// Runs one subcommand; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace normgate::cli
