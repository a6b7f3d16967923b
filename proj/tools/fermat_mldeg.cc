#include <iostream>

#include "fermat/cli.hh"

int main(int argc, char** argv) {
  return fermat::run_cli(argc, argv, std::cout, std::cerr);
}
