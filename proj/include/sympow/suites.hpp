// Named verification suites with seeded deterministic inputs.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sympow/report.hpp"

namespace sympow {

struct SuiteConfig {
  std::vector<std::string> suites;  // names, or the single entry "all"
  std::uint64_t seed = 0;
  long k_max = 5;
  long series_order = 12;
  long num_random_chars = 20;
  std::vector<std::string> lambda_tables = {"c2", "c3", "c5", "c2x4",
                                            "s3", "d4", "q8", "a4"};
  std::vector<long> cover_q = {5, 7, 13};
  long cover_e_max = 6;
};

std::vector<std::string> suite_names();

// Runs the named suites and returns the combined report. Unknown suite names
// throw std::invalid_argument. The seed fully determines every randomized
// choice; reports are byte-identical across runs except for the timing
// fields.
Report run_suite(const SuiteConfig& config);

}  // namespace sympow
