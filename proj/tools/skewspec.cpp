#include <iostream>
#include <string>
#include <vector>

#include "skewspec/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return skewspec::cli::run(args, std::cout, std::cerr);
}
