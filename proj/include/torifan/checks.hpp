#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace torifan {

// One release gate check.  seconds is wall time; checks with a pinned budget
// fail when they exceed it even if the math came out right.
struct CriterionOutcome {
  int id = 0;
  std::string name;
  bool pass = false;
  double seconds = 0.0;
  std::string detail;  // size of the evidence on success, first defect otherwise
};

// Runs the eleven release gate checks and returns them ordered by id.
// The construction-audit check runs last so its counter covers the rest.
std::vector<CriterionOutcome> run_acceptance();

// One PASS/FAIL line per check plus a summary line; returns 0 iff all passed.
int report_acceptance(std::ostream& os);

}  // namespace torifan
