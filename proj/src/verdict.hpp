#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ladder.hpp"

namespace weightcalc {

// Outcome of a single condition check at finite truncation.
//
// holds      - whether the evidence supports the condition;
// cls        - exact (decided), plateau (heuristic pass), growing (fail);
// certified  - a closed form or an exhaustive finite-range argument decided the
//              outcome (required for a theorem report to escalate a failed
//              conclusion to "violation-found");
// constants  - named witness constants, in insertion order;
// log_sup    - final running supremum of the underlying profile (log scale);
// ladder     - window suprema backing the classification;
// domain_errors - probe points skipped because they fell outside a validity
//              region (counted, never silently dropped).
struct ConditionVerdict {
  std::string id;
  bool holds = false;
  Classification cls = Classification::Growing;
  bool certified = false;
  std::vector<std::pair<std::string, double>> constants;
  std::vector<LadderPoint> ladder;
  double log_sup = 0.0;
  std::size_t witness_index = 0;
  std::string note;
  std::size_t domain_errors = 0;

  void set_constant(const std::string& k, double v) {
    for (auto& kv : constants) {
      if (kv.first == k) {
        kv.second = v;
        return;
      }
    }
    constants.emplace_back(k, v);
  }
  double constant_or(const std::string& k, double fallback) const {
    for (const auto& kv : constants) {
      if (kv.first == k) return kv.second;
    }
    return fallback;
  }
};

}  // namespace weightcalc
