#include <iostream>
#include <string>
#include <vector>

#include "relfree/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return relfree::run_cli(args, std::cout, std::cerr);
}
