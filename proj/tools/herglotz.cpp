#include <iostream>
#include <string>
#include <vector>

#include "herglotz/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return herglotz::cli::run(args, std::cout, std::cerr);
}
