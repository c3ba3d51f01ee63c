#include <iostream>
#include <string>
#include <vector>

#include "mumford/cli/app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return mumford::cli::run(std::move(args), std::cout, std::cerr);
}
