#include <iostream>
#include <string>
#include <vector>

#include "translat/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return translat::cli_main(args, std::cout, std::cerr);
}
