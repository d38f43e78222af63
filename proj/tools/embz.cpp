#include <iostream>
#include <string>
#include <vector>

#include "embz/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return embz::run_command(args, std::cout, std::cerr);
}
