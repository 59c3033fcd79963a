// Prints one PASS/FAIL line per acceptance criterion; exits nonzero on any failure.

#include <cstdlib>
#include <iostream>
#include <string>

#include "pellfrac/acceptance.hpp"

int main(int argc, char** argv) {
  pellfrac::acceptance::Options opts;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--seed" && i + 1 < argc) opts.seed = std::stoull(argv[++i]);
    if (arg == "--inject-alpha-fault") opts.alpha_fault = true;
  }
  bool all = true;
  for (const auto& r : pellfrac::acceptance::run(opts)) {
    std::cout << pellfrac::acceptance::format(r, true) << '\n';
    all = all && r.passed;
  }
  std::cout << (all ? "all criteria passed" : "some criteria FAILED") << std::endl;
  return all ? EXIT_SUCCESS : EXIT_FAILURE;
}
