#include <iostream>
#include <string>
#include <vector>

#include "lexmetric/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lexmetric::run_cli(args, std::cout, std::cerr);
}
