#include <iostream>

#include "sgcolor/cli.hpp"

int main(int argc, char** argv) {
  return sgcolor::cli::run(argc, argv, std::cout, std::cerr);
}
