#pragma once

#include <iosfwd>

#include "ramiforge/numbers.hpp"

namespace ramiforge {

int exit_code_for(errc kind);

/* Full command-line surface, testable against string streams.  Returns the
 * process exit code: 0 success, 2 invalid input or capability limit, 3
 * verification failure, 1 internal error. */
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ramiforge
