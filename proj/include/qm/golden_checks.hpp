#pragma once

// Reference results with known exact answers, rerun by `qm verify-paper`.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace qm {

struct GoldenCheck {
  std::string label;
  // Returns true on success; may write a short explanation of a failure.
  std::function<bool(std::string& detail)> run;
};

struct GoldenResult {
  std::string label;
  bool pass = false;
  std::string detail;
};

// seed drives the randomized entries.
std::vector<GoldenCheck> golden_checks(std::uint64_t seed);

// Runs every check (concurrently when parallel is set) and returns results in list order.
std::vector<GoldenResult> run_golden_checks(std::uint64_t seed, bool parallel = true);

}  // namespace qm
