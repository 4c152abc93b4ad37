#pragma once

// Command-line front end.  `run` parses argv-style arguments, dispatches
// to the library and writes JSON (or an optional human table) to `out`.
//
// Exit codes: 0 success, 2 validation failure, 3 unsupported or
// theorem-inapplicable input, 4 internal discrepancy (the payload is
// printed, never swallowed).

#include <iosfwd>
#include <string>
#include <vector>

namespace polygroup::cli {

int run(const std::vector<std::string>& args, std::ostream& out);

}  // namespace polygroup::cli
