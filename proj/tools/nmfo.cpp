#include <iostream>

#include "nmfo/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return nmfo::run(args, std::cout, std::cerr);
}
