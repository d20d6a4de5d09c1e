#include <iostream>
#include <string>
#include <vector>

#include "bhcr/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return bhcr::cli::run(args, std::cout, std::cerr);
}
