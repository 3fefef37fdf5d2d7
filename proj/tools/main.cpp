#include <iostream>
#include <string>
#include <vector>

#include "ordpat/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ordpat::run_cli(args, std::cout, std::cerr);
}
