#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace revposet::cli {

inline constexpr int kOk = 0;
inline constexpr int kViolation = 1;
inline constexpr int kExhausted = 2;
inline constexpr int kUsage = 3;

/// Runs one command; `args` excludes the program name. Results go to `out`,
/// diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace revposet::cli
