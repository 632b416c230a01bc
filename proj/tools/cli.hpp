#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cuspidal::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitSurvives = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitObstructed = 2;
inline constexpr int kExitMismatch = 3;

inline constexpr const char* kSchemaVersion = "1";
inline constexpr const char* kCapVariable = "CUSPIDAL_CANDIDATE_CAP";

// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cuspidal::cli
