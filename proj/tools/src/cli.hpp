#pragma once

#include <iosfwd>

namespace strength::cli {

enum ExitCode : int { ok = 0, refuted = 1, invalid_input = 2 };

/// Full command-line entry point; never throws.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace strength::cli
