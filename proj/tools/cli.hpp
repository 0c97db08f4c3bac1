#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace outerstring::tools {

// Exit codes: 0 success or feasible, 1 check failure or infeasible,
// 2 usage, parse or input-range error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace outerstring::tools
