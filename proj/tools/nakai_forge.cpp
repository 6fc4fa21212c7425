#include <cstdio>
#include <iostream>

#include "nakai/cli.hpp"

int main(int argc, char** argv) {
  std::setvbuf(stdout, nullptr, _IOLBF, 0);
  std::vector<std::string> args(argv + 1, argv + argc);
  return nakai::cli::run(args, std::cout, std::cerr);
}
