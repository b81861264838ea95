#include <iostream>

#include "lines/cli.hpp"

int main(int argc, char** argv) {
  return lines::cli::main(argc, argv, std::cout, std::cerr);
}
