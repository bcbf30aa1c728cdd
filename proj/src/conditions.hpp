#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "config.hpp"
#include "piecewise.hpp"
#include "sequence.hpp"
#include "verdict.hpp"

namespace weightcalc {

// Moderate growth: exists C >= 1 with M_{p+q} <= C^{p+q+1} M_p M_q.
// Profile (log M_{p+q} - log M_p - log M_q)/(p+q+1) flattened per n = p+q via
// the self-convolution; closed forms certify the built-in families.
ConditionVerdict has_mg(const LogSequence& m, const RunConfig& cfg = {});

// Root form of moderate growth: exists A >= 1 with mu_p <= A (M_p)^{1/p}.
// Profile logmu[p] - logM[p]/p.
ConditionVerdict mg_root_quotient(const LogSequence& m, const RunConfig& cfg = {});

// Scaled root condition at step d: exists A >= 1 with mu_p <= A (M_{dp})^{1/(dp)}.
// Profile logmu[p] - logM[dp]/(dp) for p <= floor(P/d). d > P -> TruncationError.
ConditionVerdict genmg(const LogSequence& m, std::size_t d,
                       const RunConfig& cfg = {});

struct GrowthIndexResult {
  std::size_t g = 0;     // minimal passing d (meaningful when finite)
  bool finite = false;   // false reports as "exceeds d_max", a distinct outcome
  std::size_t d_max = 0;
  std::vector<ConditionVerdict> per_d;
  std::string note;
};

// Minimal d in 1..d_max whose scaled root condition passes; per-d scans are
// independent, run concurrently, and aggregate deterministically.
GrowthIndexResult growth_index(const LogSequence& m, const RunConfig& cfg = {});

// Mixed two-sequence root condition: exists A >= 1 with
// lambda_p <= A (M_{ap})^{1/(ap)}. Purely numeric (ladder) by design.
ConditionVerdict mixed_quotient_root(const LogSequence& l, const LogSequence& m,
                                     std::size_t a, const RunConfig& cfg = {});

// Weak separativity: exists A >= 1 with L_{p+q} <= A^p L_p M_q. Profile per p
// of the inner maximum over q; pairs of q-Gevrey inputs are certified growing
// by the closed-form exponent analysis recorded in the implementation.
ConditionVerdict weak_separativity(const LogSequence& l, const LogSequence& m,
                                   const RunConfig& cfg = {});

// Absorption search at an arbitrary factor: exists H >= 1 (searched over the
// doubling ladder) with factor * omega(t) <= omega(H t) + H on the represented
// range. The supremum per H is exact on the piecewise-linear candidate set.
ConditionVerdict omega6_general(const LogPL& omega, double factor,
                                const RunConfig& cfg = {});

// Strong nonquasianalyticity: exists C >= 1 with
// int_1^inf omega(y t)/t^2 dt <= C (omega(y) + 1). The integral is truncated at
// the validity bound; the remainder bound is reported, and a remainder above
// 10% of the target scale marks the verdict truncation-limited (fails).
ConditionVerdict strong_nq_check(const LogPL& omega, const RunConfig& cfg = {});

struct OmegaConditions {
  ConditionVerdict om0;        // vanishes on (0, 1], nondecreasing (structural)
  ConditionVerdict om1;        // omega(2t) <= L (omega(t) + 1)
  ConditionVerdict om3;        // log t = o(omega(t)) via the decay classifier
  ConditionVerdict om4;        // u -> omega(e^u) convex (structural)
  ConditionVerdict om6;        // absorption at factor 2
  ConditionVerdict strong_nq;  // tail-integral bound
  // Absorption re-run at factors 3/2 and 4; all factors must agree with om6.
  std::vector<std::pair<double, ConditionVerdict>> factor_checks;
  bool factor_consistent = true;
};

OmegaConditions omega_conditions(const LogPL& omega, const RunConfig& cfg = {});

// Quotient-root property of the generated family: growth index of the first
// matrix row, wrapped as a verdict (finite index <=> property holds, d = index).
ConditionVerdict matrix_quotient_root(const LogPL& omega,
                                      const RunConfig& cfg = {});

}  // namespace weightcalc
