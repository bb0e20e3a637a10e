#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace res_atlas::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 2, kUsage = 3, kExcluded = 4 };

// args excludes the program name
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace res_atlas::cli
