#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace kintree::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitRejected = 1;     // verify: certificate rejected; internal solver failure
inline constexpr int kExitInputError = 2;   // parse errors, GirthTooSmall, DuplicateTerminals, ...
inline constexpr int kExitUnsupportedK = 3; // k < 5 without --oracle-fallback

/// Runs `kintree <args...>`; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kintree::cli
