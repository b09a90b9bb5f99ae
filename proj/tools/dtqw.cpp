#include <iostream>
#include <string>
#include <vector>

#include "dtqw/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dtqw::cli_dispatch(args, std::cout, std::cerr);
}
