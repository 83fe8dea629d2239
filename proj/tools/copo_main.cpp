#include <iostream>

#include "copo/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return copo::run_cli(args, std::cin, std::cout, std::cerr);
}
