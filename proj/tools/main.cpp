#include <iostream>
#include <string>
#include <vector>

#include "hlroots/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return hlroots::run_cli(args, std::cout, std::cerr);
}
