#pragma once

#include <string>
#include <vector>

#include "racg/error.hpp"
#include "racg/graph.hpp"

namespace racg {

// Check ids: 1 triangle-free, 2 connected without separating vertex or edge,
// 3 has a cut collection, 4 not a cycle, 5 common neighbours of every
// uncrossed collection lie in distinct components of the complement.
struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = true;
  // Groups of vertex labels, e.g. {{x,y},{c,d}} for check 5.
  std::vector<std::vector<std::string>> witness;
  std::string detail;
};

struct AssumptionReport {
  int level = 1;
  bool passed = true;
  std::vector<CheckResult> checks;

  const CheckResult* check(int id) const;
};

// level in 1..3; level k runs the checks of every level up to k.
AssumptionReport validate(const DefiningGraph& g, int level);

class AssumptionsFailed : public Error {
 public:
  explicit AssumptionsFailed(AssumptionReport report);
  const AssumptionReport& report() const noexcept { return report_; }

 private:
  AssumptionReport report_;
};

// Throws AssumptionsFailed unless validate(g, level) passes.
void require_valid(const DefiningGraph& g, int level);

}  // namespace racg
