#include <iostream>

#include "contavg/experiments/cli.hpp"

int main(int argc, char** argv) {
  return contavg::experiments::cli_main(argc, argv, std::cout, std::cerr);
}
