#include <iostream>

#include "codenet/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return codenet::run(args, std::cout, std::cerr);
}
