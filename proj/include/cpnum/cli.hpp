#pragma once

#include <string>
#include <vector>

namespace cpnum {

// Exit codes: 0 success/verified, 1 verification failure, 2 usage or parse
// error. JSON reports go to stdout, human-readable summaries to stderr.
int run_cli(const std::vector<std::string>& args);

}  // namespace cpnum
