#pragma once

#include <iosfwd>

namespace fairmatch::cli {

// Exit statuses shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitInput = 2;         // I/O, parse or usage error
inline constexpr int kExitInadmissible = 3;

/// Entry point behind the `fairmatch` binary, with injectable streams.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fairmatch::cli
