#include <iostream>

#include "bielliptic/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  bielliptic::CommandResult r = bielliptic::run_command(args);
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}
