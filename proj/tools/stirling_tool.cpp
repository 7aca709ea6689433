#include <iostream>
#include <string>
#include <vector>

#include "stirling/cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return stirling::cli::run(args, std::cout, std::cerr);
}
