#include <iostream>

#include "affyh/cli.hpp"

int main(int argc, char** argv) {
  return affyh::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
