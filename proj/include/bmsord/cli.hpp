#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bmsord {

/// Runs one CLI invocation. `args` excludes the program name. Returns the
/// process exit code: 0 on success, 1 for flag/usage errors, 2 for
/// validation errors (bad channel files, infeasible parameters). Validation
/// failures emit one machine-readable line on `err`:
///   error,<Kind>,"<message>"
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bmsord
