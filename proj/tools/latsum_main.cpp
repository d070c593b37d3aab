#include <iostream>
#include <string>
#include <vector>

#include "latsum/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return latsum::cli::dispatch(args, std::cout, std::cerr);
}
