#include <iostream>
#include <string>
#include <vector>

#include "rank1/cli.hpp"

int main(int argc, char* argv[]) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return rank1::cli::run(args, std::cin, std::cout, std::cerr);
}
