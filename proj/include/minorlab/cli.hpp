#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace minorlab {

enum ExitCode { kExitOk = 0, kExitInvalidInput = 2, kExitLimit = 3, kExitVerification = 4 };

// args excludes the program name. Documents go to out (or files), diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace minorlab
