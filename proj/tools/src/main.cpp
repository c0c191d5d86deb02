#include <iostream>

#include "fakepolisher_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fakepolisher::cli::run_cli(args, std::cout, std::cerr);
}
