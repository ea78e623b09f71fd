#include <iostream>
#include <vector>

#include "tracegames/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return tracegames::run_cli(args, std::cout, std::cerr);
}
