#pragma once

#include <iosfwd>

namespace zc {

// Dispatches one command-line invocation to the corresponding library
// operation.  Returns the process exit code: 0 for success / positive
// verdicts, 1 for negative verdicts (not equivalent, not found, certificate
// invalid, not closable), 2 for usage, input, or resource errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace zc
