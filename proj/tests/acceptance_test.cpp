// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.

#include <iostream>

#include "bdiv/acceptance.hpp"

int main(int argc, char** argv) {
  const char* data_dir = argc > 1 ? argv[1] : BDIV_DATA_DIR;
  const auto results = bdiv::run_acceptance(data_dir);
  int failed = 0;
  for (const auto& r : results) {
    std::cout << bdiv::format_result(r) << '\n';
    if (!r.passed) ++failed;
  }
  std::cout << results.size() - failed << "/" << results.size() << " acceptance criteria passed\n";
  return failed == 0 ? 0 : 1;
}
