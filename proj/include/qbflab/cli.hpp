#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qbflab {

namespace exit_code {
inline constexpr int kTrue = 0;
inline constexpr int kFalse = 1;
inline constexpr int kUsage = 64;
inline constexpr int kInput = 65;
inline constexpr int kBudget = 66;
inline constexpr int kInternal = 70;
}  // namespace exit_code

// Runs one command line (args excludes the program name). "-" as an input
// path reads `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace qbflab
