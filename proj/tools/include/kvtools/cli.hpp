#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kvtools {

enum ExitCode { kOk = 0, kEvalError = 1, kParseError = 2 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kvtools
