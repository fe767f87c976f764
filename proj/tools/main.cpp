#include <iostream>
#include <string>
#include <vector>

#include "v2xi/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return v2xi::cli::dispatch(args, std::cout, std::cerr);
}
