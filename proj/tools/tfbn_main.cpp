#include <iostream>
#include <string>
#include <vector>

#include "tfbn/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return tfbn::cli::run(args, std::cout, std::cerr);
}
