#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace comkit {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitPropertyFails = 1;
inline constexpr int kExitParseError = 2;
inline constexpr int kExitGuard = 3;
inline constexpr int kExitConsistency = 4;

// Runs one command; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace comkit
