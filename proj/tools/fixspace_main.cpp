#include <iostream>
#include <string>
#include <vector>

#include "fixspace/cli.hpp"

int main(int argc, char** argv) {
  return fixspace::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
