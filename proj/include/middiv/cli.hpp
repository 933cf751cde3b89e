#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace middiv::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitVerificationFailed = 3;

/// Witness index cap; the MIDDIV_MAX_I environment variable overrides it.
inline constexpr unsigned long kDefaultMaxWitnessIndex = 10'000;

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace middiv::cli
