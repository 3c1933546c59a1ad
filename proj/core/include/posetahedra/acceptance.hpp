#pragma once

#include <string>
#include <vector>

namespace posetahedra::acceptance {

struct Result {
  int id = 0;
  std::string title;
  bool pass = false;
  /// Observed values, or the reason for failure.
  std::string detail;
  double seconds = 0;
  double budget_seconds = 0;
};

constexpr int kCriteria = 11;

/// Runs one criterion (1..kCriteria). Exceptions become failures; exceeding
/// the time budget is a failure.
Result run(int id);
std::vector<Result> run_all();

/// "PASS  1 title (0.012 s, budget 1 s): detail".
std::string format(const Result& r);

}  // namespace posetahedra::acceptance
