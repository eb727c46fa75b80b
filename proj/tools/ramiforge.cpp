#include <iostream>

#include "ramiforge/cli.hpp"

int main(int argc, char** argv) {
  return ramiforge::run_cli(argc, argv, std::cout, std::cerr);
}
