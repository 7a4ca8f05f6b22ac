#include "braidwalk/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return braidwalk::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
