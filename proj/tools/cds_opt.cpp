#include <iostream>
#include <string>
#include <vector>

#include "cdsopt/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return cdsopt::run_cli(args, std::cout, std::cerr);
}
