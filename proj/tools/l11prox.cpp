#include <iostream>
#include <string>
#include <vector>

#include "l11prox/cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return l11prox::cli::run(args, std::cout, std::cerr);
}
