// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace divlab {

/// Runs one CLI invocation. `args` excludes the program name.
/// Returns the process exit code: 0 success, 1 validation or usage error,
/// 2 I/O error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace divlab
