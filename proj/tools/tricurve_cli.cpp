#include <iostream>
#include <string>
#include <vector>

#include "tricurve/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return tricurve::cli::run_cli(args, std::cout, std::cerr);
}
