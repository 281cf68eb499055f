#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hdepth::cli {

/// Runs one command line (without the program name). Every path writes a
/// JSON document to `out`; the return value is the process exit code:
/// 0 success, 2 bad input, 3 internal invariant failure. With
/// --quiet-status a negative verdict returns 1 instead of 0.
int run(const std::vector<std::string>& args, std::ostream& out, std::istream& in);

} // namespace hdepth::cli
