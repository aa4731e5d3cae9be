#include <iostream>
#include <string>
#include <vector>

#include "thermaldose/cli_io.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return thermaldose::cli::run(args, std::cout, std::cerr);
}
