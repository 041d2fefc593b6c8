#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace surfaut::cli {

inline constexpr std::string_view kToolName = "surfaut";
inline constexpr std::string_view kVersion = "1.0.0";

// Exit codes: 0 success / feasible / pass, 1 a valid negative result
// (infeasible, contradiction, audit failure), 2 bad input.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitInputError = 2;

// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace surfaut::cli
