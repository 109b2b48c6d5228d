#include "ctq/cli.hpp"

#include <iostream>

int main(int argc, char **argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  ctq::RunResult r = ctq::run_command_line(args, std::cin);
  std::cout << r.output;
  std::cerr << r.error;
  return r.status;
}
