#pragma once

#include <iosfwd>

namespace levi::cli {

/// Runs one CLI invocation against the given streams. Data goes to out,
/// diagnostics to err. Returns the process exit code: 0 on success, 1 on a
/// usage or domain error, 2 on a verification failure.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace levi::cli
