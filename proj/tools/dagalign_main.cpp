#include <iostream>
#include <string>
#include <vector>

#include "dagalign/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return dagalign::cli_main(args, std::cout, std::cerr);
}
