#include <iostream>
#include <string>
#include <vector>

#include "unc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return unc::cli::run(args, std::cout, std::cerr);
}
