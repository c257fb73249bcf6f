#include <iostream>
#include <string>
#include <vector>

#include "ggr/cli.hpp"

int main(int argc, char **argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ggr::cli::run(args, std::cin, std::cout, std::cerr);
}
