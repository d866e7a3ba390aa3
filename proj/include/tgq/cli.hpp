#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tgq {

// Runs one command line (without the program name).  Exit codes:
//   0  every check passed
//   1  at least one FAIL verdict
//   2  usage or input error
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tgq
