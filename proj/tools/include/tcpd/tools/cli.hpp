#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tcpd::cli {

inline constexpr int kExitDecided = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitInputError = 2;

/// Runs one subcommand. `args` excludes the program name. Results go to
/// `out` as a structured document, diagnostics and progress to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace tcpd::cli
