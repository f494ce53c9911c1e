#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rspunct::cli {

// Full command-line surface, callable in-process for testing. `args` is the
// argument list without the program name. Exit codes are a stable contract:
//   0 success / decodable / certificate valid
//   1 usage or malformed input
//   2 infeasible parameters
//   3 witness found / certificate invalid
//   4 resource cap exceeded
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rspunct::cli
