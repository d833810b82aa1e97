#include <iostream>

#include "pathvar/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return pathvar::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cin, std::cout, std::cerr);
}
