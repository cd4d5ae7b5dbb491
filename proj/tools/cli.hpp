#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "cyclofun/types.hpp"

namespace cyclofun::cli {

enum Exit : int {
  kPass = 0,
  kIdentityFailure = 1,
  kInputError = 2,
  kVerificationFailure = 3,
  kDomainViolation = 4,
};

/// Accepts "re", "re+imi", "re-imi", "imi" and "re,im". Throws
/// std::invalid_argument on anything else.
Complex parse_complex(const std::string& text);

/// Runs one command line (args excludes the program name) and returns the
/// exit code. Output goes to `out` unless --out names a file.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cyclofun::cli
