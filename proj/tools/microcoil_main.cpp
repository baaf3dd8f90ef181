#include <iostream>
#include <string>
#include <vector>

#include "microcoil/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return microcoil::RunCli(args, std::cout, std::cerr);
}
