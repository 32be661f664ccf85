#include <iostream>
#include <string>
#include <vector>

#include "nbasis/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return nbasis::cli::run_cli(args, std::cout, std::cerr);
}
