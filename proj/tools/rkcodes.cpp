#include "rkcodes/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return rkcodes::run_cli(argc, argv, std::cout, std::cerr);
}
