#include <iostream>

#include "seqlc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return seqlc::cli::run(args, std::cout, std::cerr);
}
