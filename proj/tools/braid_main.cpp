#include <iostream>
#include <string>
#include <vector>

#include "braid/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return braid::cli::dispatch(args, std::cout, std::cerr);
}
