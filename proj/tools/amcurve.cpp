#include <iostream>
#include <string>
#include <vector>

#include "amcurve/cli.hpp"

int main(int argc, char** argv) {
  return amcurve::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
