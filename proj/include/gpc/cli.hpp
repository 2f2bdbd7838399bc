#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gpc/exactnum.hpp"

namespace gpc::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailure = 1;
inline constexpr int kInvalidInput = 2;
inline constexpr int kConstructionFailure = 3;

struct CommandResult {
    int exit_code = kOk;
    std::string payload;     // stdout: JSON document (or CSV with --csv)
    std::string diagnostics; // stderr
};

// Runs one command line. `args` excludes the program name.
CommandResult run(const std::vector<std::string>& args);

// Throws Error(ParseError) for anything but [sign]digits[/digits].
Rational parse_rational(std::string_view text);

} // namespace gpc::cli
