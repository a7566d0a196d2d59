#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace hls::cli {

/// Exit codes: 0 success, 1 a verification found a counterexample or failed
/// bound, 2 usage or resource errors.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (args excludes the program name). Results go to `out`
/// unless --out is given; diagnostics go to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

} // namespace hls::cli
