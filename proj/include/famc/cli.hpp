#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace famc {

// Full command-line driver, callable in-process for tests.  `args` excludes
// the program name.  Exit codes: 0 success / all checks pass, 1 verification
// or scan-row failure, 2 parse or validation error, 3 cap or resource limit,
// 4 internal error.
int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err);

}  // namespace famc
