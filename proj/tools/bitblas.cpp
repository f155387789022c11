#include <iostream>
#include <string>
#include <vector>

#include "bitblas/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return bitblas::cli::run(args, std::cout, std::cerr);
}
