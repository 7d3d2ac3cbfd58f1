#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace twobridge::cli {

// Runs one command. args excludes the program name. Returns the process exit
// code: 0 on success, 1 on invalid input or usage errors, 2 when an internal
// verification tripwire fires.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace twobridge::cli
