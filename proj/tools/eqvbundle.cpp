#include <iostream>

#include "eqv/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return eqv::run_cli(args, std::cin, std::cout, std::cerr);
}
