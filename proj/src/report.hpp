#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "verdict.hpp"

namespace weightcalc {

enum class DirectionStatus { Consistent, Vacuous, Indeterminate, ViolationFound };

inline const char* to_string(DirectionStatus s) {
  switch (s) {
    case DirectionStatus::Consistent: return "consistent";
    case DirectionStatus::Vacuous: return "vacuous";
    case DirectionStatus::Indeterminate: return "indeterminate";
    case DirectionStatus::ViolationFound: return "violation-found";
  }
  return "?";
}

// One implication (or unconditional assertion) inside a theorem report.
struct Direction {
  std::string name;
  std::string kind;  // "sequence-exact", "function-grid", "index-bound", "structural"
  ConditionVerdict premise;
  ConditionVerdict conclusion;
  std::vector<std::string> correspondences;  // constant recipes used, human-readable
  std::vector<std::pair<std::string, double>> constants;
  DirectionStatus status = DirectionStatus::Consistent;
  double max_violation = 0.0;  // worst signed slack of the conclusion inequality
  std::string note;

  void set_constant(const std::string& k, double v) {
    for (auto& kv : constants) {
      if (kv.first == k) {
        kv.second = v;
        return;
      }
    }
    constants.emplace_back(k, v);
  }
};

struct TheoremReport {
  std::string id;
  std::vector<Direction> directions;
  std::string overall;  // "consistent" | "indeterminate" | "violation-found"
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, std::string>> inputs;

  void finalize() {
    bool violation = false;
    bool indeterminate = false;
    for (const auto& d : directions) {
      if (d.status == DirectionStatus::ViolationFound) violation = true;
      if (d.status == DirectionStatus::Indeterminate) indeterminate = true;
    }
    overall = violation ? "violation-found"
                        : (indeterminate ? "indeterminate" : "consistent");
  }
};

// Status algebra: a failed conclusion only counts as a violation when the
// premise evidence is certified; heuristic premises degrade to indeterminate.
inline DirectionStatus conditional_status(const ConditionVerdict& premise,
                                          bool conclusion_ok) {
  if (!premise.holds) return DirectionStatus::Vacuous;
  if (conclusion_ok) return DirectionStatus::Consistent;
  return premise.certified ? DirectionStatus::ViolationFound
                           : DirectionStatus::Indeterminate;
}

// When the conclusion is itself a verdict, its failure must be certified to
// count as a counterexample: an unconfirmed search or an unstabilised ladder
// leaves the direction undecided rather than refuted.
inline DirectionStatus conditional_status(const ConditionVerdict& premise,
                                          const ConditionVerdict& conclusion) {
  if (!premise.holds) return DirectionStatus::Vacuous;
  if (conclusion.holds) return DirectionStatus::Consistent;
  return (premise.certified && conclusion.certified)
             ? DirectionStatus::ViolationFound
             : DirectionStatus::Indeterminate;
}

// A constant search that exhausts its ladder has not refuted anything; it can
// only confirm or leave the direction undecided.
inline DirectionStatus search_status(const ConditionVerdict& premise,
                                     bool found) {
  if (!premise.holds) return DirectionStatus::Vacuous;
  return found ? DirectionStatus::Consistent : DirectionStatus::Indeterminate;
}

inline DirectionStatus unconditional_status(bool ok) {
  return ok ? DirectionStatus::Consistent : DirectionStatus::ViolationFound;
}

}  // namespace weightcalc
