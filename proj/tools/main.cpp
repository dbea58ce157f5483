#include <iostream>

#include "rootfunc/cli.hpp"

int main(int argc, char** argv) {
  return rootfunc::cli::run_command(argc, argv, std::cout, std::cerr);
}
