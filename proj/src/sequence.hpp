#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "verdict.hpp"

namespace weightcalc {

// Construction families whose identity survives the operations that preserve a
// closed form; used to certify verdicts that otherwise rely on the window
// ladder heuristic.
enum class FamilyKind { None, Gevrey, QGevrey };

struct Provenance {
  FamilyKind kind = FamilyKind::None;
  // Gevrey: M_p = (p!)^s with s = param.
  // QGevrey: M_p = q^(p*p) with log q = param (stored in logs so parameter
  // arithmetic under powers and products stays exact).
  double param = 0.0;
};

// A positive sequence M_0 = 1, M_1, M_2, ... stored in natural logs at a fixed
// truncation P. Canonical storage is the quotient array logmu[p] = log(M_p/M_{p-1})
// for p = 1..P (logmu[0] = 0); logM is its prefix-sum companion, computed once at
// construction so that rebuilding from the stored quotients is bitwise stable.
class LogSequence {
public:
  LogSequence() = default;

  // quotients[i] = log mu_{i+1}, i = 0..P-1.
  static LogSequence from_quotients(std::vector<double> quotients,
                                    Provenance prov = {});
  // logs[p] = log M_p, p = 0..P; logs[0] must be 0. Canonicalised via diffs.
  static LogSequence from_logs(const std::vector<double>& logs);

  // M_p = (p!)^s, s > 0.
  static LogSequence gevrey(double s, std::size_t P);
  // M_p = q^(p*p), q > 1.
  static LogSequence q_gevrey(double q, std::size_t P);

  std::size_t truncation() const { return logmu_.empty() ? 0 : logmu_.size() - 1; }
  double log_at(std::size_t p) const;        // log M_p
  double quotient_at(std::size_t p) const;   // log mu_p (p >= 1); p = 0 -> 0
  const std::vector<double>& logs() const { return logM_; }
  const std::vector<double>& quotients() const { return logmu_; }
  const Provenance& provenance() const { return prov_; }

  bool is_normalized() const;  // M_0 = 1 <= M_1
  // true, or (false, smallest quotient index p with mu_p < mu_{p-1}).
  std::pair<bool, std::size_t> is_log_convex() const;

  bool same_logs(const LogSequence& other) const { return logmu_ == other.logmu_; }

private:
  std::vector<double> logmu_;  // size P+1, [0] = 0
  std::vector<double> logM_;   // size P+1, prefix sums of logmu_
  Provenance prov_;
};

// Pointwise product (M_p N_p); requires equal truncations.
LogSequence product(const LogSequence& m, const LogSequence& n);
// Real power (M_p)^ell, ell > 0.
LogSequence power(const LogSequence& m, double ell);
// Tilde transform: result_p = (M_{ap})^{1/a}, truncation floor(P/a); a >= 1.
LogSequence tilde(const LogSequence& m, unsigned a);
// Geometric rescale c^p M_p given log c; preserves log-convexity and equivalence class.
LogSequence geometric_scale(const LogSequence& m, double logc);

// Infimal convolution (M*N)_p = min_{0<=q<=p} M_q N_{p-q}, truncation P_M + P_N.
// Requires both operands normalized. Log-convex operands take the sorted-merge
// quotient route (the canonical construction); otherwise direct minimisation.
LogSequence convolve(const LogSequence& m, const LogSequence& n);
// Direct O(P_M * P_N) minimisation, any operands; oracle for the merge route.
LogSequence convolve_direct(const LogSequence& m, const LogSequence& n);

// Largest log-convex minorant (lower convex hull of p -> log M_p). Idempotent;
// returns the input unchanged when it is already log-convex.
LogSequence lc_regularize(const LogSequence& m);

enum class RelationKind { PointwiseLeq, Dominated, Equivalent };

// relate(M, N, kind):
//   PointwiseLeq - exhaustive exact check of M_p <= N_p over the common truncation;
//   Dominated    - evidence for sup_p (M_p/N_p)^{1/p} < infinity via the ladder
//                  on the profile (log M_p - log N_p)/p, witness C = exp(sup);
//   Equivalent   - both directions.
ConditionVerdict relate(const LogSequence& m, const LogSequence& n, RelationKind kind);

// Membership evidence for the admissible class: normalized and log-convex
// (exact), quotients tending to infinity (closed form for the built-in families
// and constant-quotient sequences, else the roots profile must classify growing).
ConditionVerdict check_lc(const LogSequence& m);

}  // namespace weightcalc
