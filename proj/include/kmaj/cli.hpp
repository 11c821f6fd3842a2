#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kmaj {

// Full command-line front end, main() minus the process plumbing. args is
// argv[1..]; results go to out, diagnostics to err. Returns the exit code:
// 0 success (verify: pass), 1 error or verify mismatch, 2 search budget
// exhausted before an answer.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace kmaj
