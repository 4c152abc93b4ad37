#include <iostream>
#include <string>
#include <vector>

#include "polygroup/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return polygroup::cli::run(args, std::cout);
}
