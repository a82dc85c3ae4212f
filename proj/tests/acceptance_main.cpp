// Runs every acceptance criterion and prints one line per criterion.
// Exit status is nonzero when any criterion fails.

#include <cstdio>
#include <cstring>
#include <iostream>

#include "reesfb/acceptance.hpp"

int main(int argc, char** argv) {
  reesfb::AcceptanceOptions options;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--skip-slow") == 0) {
      options.include_slow = false;
    } else {
      options.only.push_back(std::atoi(argv[i]));
    }
  }
  options.progress = [](reesfb::CriterionResult const& r) {
    std::cout << reesfb::format(r) << std::endl;
  };
  auto        results = reesfb::run_acceptance(options);
  std::size_t passed  = 0;
  for (auto const& r : results) {
    passed += r.passed ? 1 : 0;
  }
  std::cout << passed << "/" << results.size() << " criteria passed" << std::endl;
  return passed == results.size() ? 0 : 1;
}
