#pragma once

#include <ostream>

namespace latcontact::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 2;
inline constexpr int kDomain = 3;
inline constexpr int kInvariant = 4;

// Entry point shared by the executable and the tests. With --json the JSON
// object goes to `out` and human-readable text to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace latcontact::cli
