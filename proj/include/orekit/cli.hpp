#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orekit::cli {

// Exit codes.
inline constexpr int kSuccess = 0;        // success / valid / yes / found
inline constexpr int kNegative = 1;       // invalid / no / bound-exhausted
inline constexpr int kIndeterminate = 2;  // precision too low to decide
inline constexpr int kUsage = 3;          // usage or parse error

// Default precision when neither --precision nor this variable is set: 16.
inline constexpr const char* kPrecisionEnv = "OREKIT_PRECISION";

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace orekit::cli
