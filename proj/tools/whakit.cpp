#include <iostream>

#include "whakit/cli.hpp"

int main(int argc, char** argv) {
  return whakit::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
