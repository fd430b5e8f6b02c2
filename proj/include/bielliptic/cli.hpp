#pragma once

#include <string>
#include <vector>

namespace bielliptic {

struct CommandResult {
  int exit_code = 0;  // 0 success, 2 flag or parse error, 3 library precondition or arithmetic error
  std::string out;
  std::string err;
};

// args excludes the program name.
CommandResult run_command(const std::vector<std::string>& args);

}  // namespace bielliptic
