#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qm::cli {

enum ExitCode : int { kOk = 0, kInputError = 1, kResourceError = 2, kDefect = 3 };

// args excludes the program name. JSON results go to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qm::cli
