#include <iostream>

#include "stackgame/cli.hpp"

int main(int argc, char** argv) {
  return stackgame::run_cli(argc, argv, std::cout, std::cerr);
}
