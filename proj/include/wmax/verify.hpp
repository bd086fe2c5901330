#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

// The acceptance-criteria suite: every formula in the library is checked
// against an independent route (oracle, residual, or frozen constant) with
// pinned tolerances. kFull runs the criteria at their contractual sizes;
// kQuick shrinks the workloads for interactive use without changing any
// tolerance.

namespace wmax {

enum class VerifyLevel { kQuick, kFull };

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  double worst = 0.0;      // worst deviation observed (criterion-specific)
  double tolerance = 0.0;
  std::string detail;
};

std::vector<CriterionResult> run_acceptance(VerifyLevel level, std::uint64_t seed);

// One line per criterion plus a summary; returns true iff all passed.
bool report_acceptance(const std::vector<CriterionResult>& results, std::ostream& out);

}  // namespace wmax
