// Runs every acceptance criterion and prints one line per criterion.
// Exit status is 0 only when all criteria pass.

#include "braidwalk/acceptance.hpp"

#include <cstdlib>
#include <iostream>
#include <string>

int main(int argc, char** argv) {
  namespace acc = braidwalk::acceptance;
  acc::Options options;
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));
  if (selected.empty())
    for (const auto& info : acc::criteria()) selected.push_back(info.id);

  int failed = 0;
  for (int id : selected) {
    const auto result = acc::run_criterion(id, options);
    std::cout << acc::format_result(result) << std::endl;
    failed += !result.passed;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
