// Distributed under the Apache License, Version 2.0.
// See LICENSE for details.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace knotforge::cli {

enum ExitCode { kOk = 0, kVerificationFailed = 1, kUsage = 2 };

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace knotforge::cli
