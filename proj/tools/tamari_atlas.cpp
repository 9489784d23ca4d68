#include <iostream>

#include "tamari/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return tamari::run_cli(args, std::cin, std::cout, std::cerr);
}
