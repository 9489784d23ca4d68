#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tamari {

// Runs one tamari-atlas invocation. args excludes the program name.
// Returns 0 on success, 1 on usage, parse or validation errors, and 2 when
// verification fails.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace tamari
