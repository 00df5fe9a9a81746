#pragma once

#include <iosfwd>
#include <string_view>

namespace lpf::cli {

inline constexpr std::string_view kSchemaVersion = "lpfbinom/1";

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kDomain = 3,
  kVerificationFailed = 4,
  kIo = 5,
};

/// Parses argv and runs one command, writing one JSON object per line to
/// `out` and diagnostics to `err`. Returns the process exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lpf::cli
