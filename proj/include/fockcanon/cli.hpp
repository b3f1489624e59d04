#pragma once

// Command-line front end. Exit codes: 0 success, 1 verification failure,
// 2 bad arguments, 3 engine convention fault.

#include <ostream>
#include <string>
#include <vector>

namespace fockcanon::cli {

inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kUsage = 2;
inline constexpr int kConventionFault = 3;

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fockcanon::cli
