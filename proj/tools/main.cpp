// Distributed under the Apache License, Version 2.0.
// See LICENSE for details.

#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  return knotforge::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
