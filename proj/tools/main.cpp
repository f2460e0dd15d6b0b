#include <iostream>

#include "ecss/cli.hpp"

int main(int argc, char** argv) {
  return ecss::cli::run(argc, argv, std::cout, std::cerr);
}
