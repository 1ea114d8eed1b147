// Command-line front end. Exit codes: 0 success, 1 verification failure,
// 2 input error.
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace toricmirror {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitInputError = 2;

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toricmirror
