#pragma once

#include <cstddef>
#include <string>

#include "conditions.hpp"
#include "config.hpp"
#include "matrix.hpp"
#include "piecewise.hpp"
#include "report.hpp"
#include "sequence.hpp"
#include "theorems.hpp"
#include "verdict.hpp"

namespace weightcalc {

// JSON serialization. Keys keep insertion order and doubles print in
// shortest round-trip form, so repeated runs on the same inputs produce
// byte-identical output.
std::string to_json(const ConditionVerdict& v, int indent = 2);
std::string to_json(const GrowthIndexResult& g, int indent = 2);
std::string to_json(const OmegaConditions& oc, int indent = 2);
std::string to_json(const TheoremReport& r, int indent = 2);
std::string to_json(const SuiteResult& s, int indent = 2);
std::string to_json(const MatrixRelationReport& r, int indent = 2);

// Compact description of a sequence: truncation, construction family (when
// known), normalization and convexity flags, leading entries, final entries.
std::string sequence_summary_json(const LogSequence& m, std::size_t head = 8,
                                  int indent = 2);

// CSV exporters (%.17g throughout, so values round-trip).
std::string sequence_csv(const LogSequence& m);   // p,logM,logmu
std::string weightfn_csv(const LogPL& f);         // u,value,slope
std::string conjugate_csv(const ConjugatePL& c);  // x,value

// Parse a sequence description: either an inline form "gevrey:<s>" /
// "qgevrey:<q>" or a JSON object {"kind": ..., "truncation": ...} with
// "param" for the families or "values" for kinds "quotients" and "logs".
// The default truncation applies when the argument does not carry its own.
LogSequence parse_sequence_spec(const std::string& spec,
                                std::size_t default_truncation);

}  // namespace weightcalc
