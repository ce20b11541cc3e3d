#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace selfsim::cli {

// Command dispatch; returns the process exit code.
//   0  success
//   1  degenerate input with --perturb off (or a command that cannot
//      handle degeneracy)
//   2  parse or usage error
//   3  internal invariant violation
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace selfsim::cli
