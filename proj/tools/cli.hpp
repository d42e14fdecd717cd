#pragma once

#include <ostream>

namespace hyperrig::cli {

inline constexpr const char* kToolVersion = "0.1.0";

// Runs one command. Reports go to `out`, diagnostics to `err`.
// Exit codes: 0 success, 2 input error, 1 internal failure.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hyperrig::cli
