#include <iostream>

#include "alsim/cli/commands.hpp"

int main(int argc, char** argv) {
  return alsim::cli::run_cli(argc, argv, std::cout, std::cerr);
}
