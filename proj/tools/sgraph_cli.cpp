#include <iostream>

#include "sgraph/cli.hpp"

int main(int argc, char** argv) {
  return sgraph::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
