#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gkm::cli {

// Full command-line front end; returns the process exit code.
// 0: success / witness found, 1: no obstruction found,
// 2: invalid parameters, 3: internal invariant violation.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace gkm::cli
