#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace microcoil {

enum class OutputFormat { kText, kCsv, kJson };

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsageError = 2;

// Entry point of the `microcoil` tool. `args` includes the program name.
// Data goes to `out`, diagnostics to `err`.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace microcoil
