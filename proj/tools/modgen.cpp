#include <iostream>
#include <vector>

#include "modgen/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  modgen::CliResult r = modgen::run_command(args);
  std::cout << r.output;
  return r.code;
}
