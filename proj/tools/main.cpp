#include <iostream>
#include <string>
#include <vector>

#include "extbinom/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return extbinom::cli::run(args, std::cout, std::cerr);
}
