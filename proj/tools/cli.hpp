#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace diamaug::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kNo = 1;
inline constexpr int kUsage = 2;  // also parse errors and inconsistent maps
inline constexpr int kDisconnected = 3;
inline constexpr int kResource = 4;
inline constexpr int kNotAugmenting = 5;
inline constexpr int kRuleFailure = 6;
inline constexpr int kVerifyFailure = 7;

/// Runs the tool. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace diamaug::cli
