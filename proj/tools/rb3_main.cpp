#include <iostream>
#include <string>
#include <vector>

#include "rb3lie/rb3lie.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return rb3lie::run_command(args, std::cout, std::cerr);
}
