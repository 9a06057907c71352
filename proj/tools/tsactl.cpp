#include <iostream>
#include <string>
#include <vector>

#include "cli/commands.hpp"

int main(int argc, char** argv) {
  return tsa::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
