#include <iostream>
#include <string>
#include <vector>

#include "toricmirror/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return toricmirror::run(args, std::cout, std::cerr);
}
