#include <iostream>

#include "spinphase/cli/reports.hpp"

int main(int argc, char** argv) {
  return spinphase::cli::run_cli(argc, argv, std::cout, std::cerr);
}
