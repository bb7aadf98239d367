#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cjt {

// Exit codes: 0 computed, 2 computed and the sought property failed, 1 usage or input error.
constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitFinding = 2;

// args excludes the program name.
int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cjt
