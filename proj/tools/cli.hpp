#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace flipcount::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one subcommand. The report goes to `out`; diagnostics and timing go
/// to `err`, so `out` is byte-identical for identical arguments.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flipcount::cli
