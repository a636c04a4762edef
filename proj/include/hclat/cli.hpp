#pragma once

#include <ostream>
#include <span>
#include <string>

namespace hcl::cli {

inline constexpr const char* version = "1.0.0";

// Exit codes.
inline constexpr int ok = 0;
inline constexpr int check_failed = 1;
inline constexpr int usage_error = 2;

// args excludes the program name. The report goes to `out`, diagnostics and
// progress to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace hcl::cli
