#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symext {

// Exit codes: 0 all verdicts pass, 2 a verdict failed, 3 bad input, 4 resource cap hit,
// 1 internal error.
enum ExitCode { kExitPass = 0, kExitInternal = 1, kExitAssertion = 2, kExitInput = 3, kExitResource = 4 };

// args excludes the program name. Reports go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symext
