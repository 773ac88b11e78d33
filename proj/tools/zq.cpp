#include <iostream>
#include <string>
#include <vector>

#include "zq/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return zq::run_cli(args, std::cout, std::cerr);
}
