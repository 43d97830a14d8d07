#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace extbinom::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kUsageError = 2;

// Runs one command line (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace extbinom::cli
