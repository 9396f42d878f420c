#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wavechan {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double runtime_seconds = 0;
};

// Runs every acceptance criterion, printing one pass/fail line per criterion
// as it completes. Returns the individual results.
std::vector<CriterionResult> run_acceptance_detailed(std::ostream& os);

// True iff every criterion passed.
bool run_acceptance(std::ostream& os, const std::string& unused_dir = "");

}  // namespace wavechan
