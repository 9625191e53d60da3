#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace bdiv {

struct CriterionResult {
  int id;
  std::string title;
  bool passed;
  std::string detail;
  double seconds;
};

/// Runs every acceptance criterion against the bundled fixtures in `data_dir`
/// (scenario1..4.json, mcda_table3.json). Random suites are seeded by `seed`.
std::vector<CriterionResult> run_acceptance(const std::filesystem::path& data_dir, std::uint64_t seed = 20210614);

/// "[PASS] 3  title  (detail, 0.001s)".
std::string format_result(const CriterionResult& r);

}  // namespace bdiv
