#include <iostream>
#include <string>
#include <vector>

#include "qwgsim/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qwgsim::run_cli(args, std::cout, std::cerr);
}
