#include <iostream>
#include <string>
#include <vector>

#include "fixpoint/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fixpoint::run_cli(args, std::cout, std::cerr);
}
