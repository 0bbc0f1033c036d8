#include <iostream>

#include "gpdrep/cli.hpp"

int main(int argc, char** argv) {
  return gpdrep::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
