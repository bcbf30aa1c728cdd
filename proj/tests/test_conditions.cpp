#include <cmath>
#include <cstddef>
#include <vector>

#include "conditions.hpp"
#include "doctest.h"
#include "errors.hpp"
#include "matrix.hpp"
#include "oracles.hpp"
#include "random_lc.hpp"
#include "sequence.hpp"
#include "weightfun.hpp"

using weightcalc::Classification;
using weightcalc::ConditionVerdict;
using weightcalc::LogSequence;
using weightcalc::RunConfig;

namespace {

RunConfig small_cfg() {
  RunConfig cfg;
  cfg.truncation = 512;
  return cfg;
}

LogSequence generic_copy(const LogSequence& m) {
  // Same numbers, no construction-family tag: exercises the ladder path.
  const std::vector<double> q(m.quotients().begin() + 1, m.quotients().end());
  return LogSequence::from_quotients(q);
}

}  // namespace

TEST_CASE("product bound holds exactly for the factorial family") {
  const ConditionVerdict v = weightcalc::has_mg(LogSequence::gevrey(1.0, 512));
  CHECK(v.holds);
  CHECK(v.certified);
  CHECK(v.cls == Classification::Exact);
  CHECK(v.constant_or("C", 0.0) == 2.0);
}

TEST_CASE("product bound profile plateaus on the untagged factorial data") {
  const ConditionVerdict v =
      weightcalc::has_mg(generic_copy(LogSequence::gevrey(1.0, 512)));
  CHECK(v.holds);
  CHECK_FALSE(v.certified);
  CHECK(v.cls == Classification::Plateau);
  REQUIRE(v.ladder.size() == 4);
  const double expected[4] = {0.647, 0.667, 0.679, 0.685};
  for (int i = 0; i < 4; ++i)
    CHECK(std::fabs(v.ladder[i].sup - expected[i]) < 0.005);
}

TEST_CASE("product bound fails with certainty for the q-geometric family") {
  const ConditionVerdict v =
      weightcalc::has_mg(LogSequence::q_gevrey(2.0, 512));
  CHECK_FALSE(v.holds);
  CHECK(v.certified);
  CHECK(v.cls == Classification::Growing);
}

TEST_CASE("constant-quotient sequences pass the product bound with C = 1") {
  const LogSequence geo =
      LogSequence::from_quotients(std::vector<double>(64, std::log(2.0)));
  const ConditionVerdict v = weightcalc::has_mg(geo);
  CHECK(v.holds);
  CHECK(v.cls == Classification::Exact);
  CHECK(v.constant_or("C", 0.0) == 1.0);
}

TEST_CASE("root form of the product bound plateaus for factorials") {
  const ConditionVerdict v =
      weightcalc::mg_root_quotient(generic_copy(LogSequence::gevrey(1.0, 512)));
  CHECK(v.holds);
  CHECK(v.cls == Classification::Plateau);
  const double expected[4] = {0.953, 0.974, 0.9855, 0.992};
  REQUIRE(v.ladder.size() == 4);
  for (int i = 0; i < 4; ++i)
    CHECK(std::fabs(v.ladder[i].sup - expected[i]) < 0.005);
  // Witness approaches e from below at this truncation.
  const double a = v.constant_or("A", 0.0);
  CHECK(a > 2.5);
  CHECK(a < 2.7182818284590452 + 0.05);
}

TEST_CASE("root and product forms agree on closed-form families") {
  // The root-form ladder needs the longer range before its final windows
  // flatten on factorial-type data.
  for (auto make : {+[] { return LogSequence::gevrey(1.0, 512); },
                    +[] { return LogSequence::gevrey(2.0, 512); },
                    +[] { return LogSequence::q_gevrey(2.0, 512); }}) {
    const LogSequence m = make();
    CHECK(weightcalc::has_mg(m).holds ==
          weightcalc::mg_root_quotient(m).holds);
  }
}

TEST_CASE("scaled root condition and its closed forms") {
  const LogSequence q2 = LogSequence::q_gevrey(2.0, 512);
  const ConditionVerdict d1 = weightcalc::genmg(q2, 1);
  CHECK_FALSE(d1.holds);
  CHECK(d1.certified);
  CHECK(d1.cls == Classification::Growing);
  const ConditionVerdict d2 = weightcalc::genmg(q2, 2);
  CHECK(d2.holds);
  CHECK(d2.cls == Classification::Exact);
  CHECK(d2.constant_or("A", 0.0) == 1.0);
  CHECK(weightcalc::genmg(LogSequence::gevrey(1.0, 512), 1).holds);
  CHECK_THROWS_AS((void)weightcalc::genmg(q2, 0), weightcalc::ParamError);
  CHECK_THROWS_AS((void)weightcalc::genmg(q2, 513),
                  weightcalc::TruncationError);
}

TEST_CASE("scaled root condition is monotone in the step") {
  for (std::uint64_t seed : {12ULL, 40ULL}) {
    const LogSequence m = weightcalc::random_lc(seed, 256);
    bool passed = false;
    for (std::size_t d = 1; d <= 4; ++d) {
      const bool now = weightcalc::genmg(m, d).holds;
      if (passed) CHECK(now);
      passed = passed || now;
    }
  }
}

TEST_CASE("growth index separates the two built-in families") {
  const weightcalc::GrowthIndexResult gq =
      weightcalc::growth_index(LogSequence::q_gevrey(2.0, 512), small_cfg());
  CHECK(gq.finite);
  CHECK(gq.g == 2);
  REQUIRE(gq.per_d.size() >= 2);
  CHECK_FALSE(gq.per_d[0].holds);
  CHECK(gq.per_d[1].holds);
  CHECK(gq.per_d[1].cls == Classification::Exact);

  const weightcalc::GrowthIndexResult gf =
      weightcalc::growth_index(LogSequence::gevrey(2.0, 512), small_cfg());
  CHECK(gf.finite);
  CHECK(gf.g == 1);
}

TEST_CASE("mixed root condition compares two sequences") {
  // Self-comparison at unit step flattens only once the window ladder sees
  // the longer range on factorial-type data.
  const LogSequence fact = LogSequence::gevrey(1.0, 512);
  const ConditionVerdict same =
      weightcalc::mixed_quotient_root(fact, fact, 1);
  CHECK(same.holds);

  const LogSequence q2 = LogSequence::q_gevrey(2.0, 256);
  CHECK(weightcalc::mixed_quotient_root(q2, q2, 2).holds);
  const LogSequence q4 = LogSequence::q_gevrey(4.0, 256);
  const ConditionVerdict gap = weightcalc::mixed_quotient_root(q4, q2, 2);
  CHECK_FALSE(gap.holds);
}

TEST_CASE("separated product bound distinguishes the families") {
  const LogSequence fact = LogSequence::gevrey(1.0, 256);
  CHECK(weightcalc::weak_separativity(fact, fact).holds);
  const LogSequence q2 = LogSequence::q_gevrey(2.0, 256);
  const ConditionVerdict v = weightcalc::weak_separativity(q2, q2);
  CHECK_FALSE(v.holds);
  CHECK(v.certified);
}

TEST_CASE("absorption search finds the documented constants") {
  const weightcalc::LogPL om_fact =
      weightcalc::omega_of(LogSequence::gevrey(1.0, 512));
  const ConditionVerdict v = weightcalc::omega6_general(om_fact, 2.0);
  CHECK(v.holds);
  CHECK(v.constant_or("H", 0.0) == 2.0);

  const ConditionVerdict v8 = weightcalc::omega6_general(om_fact, 8.0);
  CHECK(v8.holds);
  CHECK(v8.constant_or("H", 0.0) == 8.0);

  const weightcalc::LogPL om_q =
      weightcalc::omega_of(LogSequence::q_gevrey(2.0, 512));
  const ConditionVerdict vq = weightcalc::omega6_general(om_q, 2.0);
  CHECK_FALSE(vq.holds);
  CHECK(vq.cls == Classification::Growing);

  CHECK_THROWS_AS((void)weightcalc::omega6_general(om_fact, 1.0),
                  weightcalc::ParamError);
}

TEST_CASE("weight-function condition bundle for the factorial family") {
  const weightcalc::OmegaConditions oc = weightcalc::omega_conditions(
      weightcalc::omega_of(LogSequence::gevrey(1.0, 512)));
  CHECK(oc.om0.holds);
  CHECK(oc.om0.cls == Classification::Exact);
  // The doubling ratio of this weight approaches its limit like the
  // reciprocal of the argument itself, not of its logarithm; on a log-spaced
  // grid the window ladder keeps seeing growth at any feasible range, so the
  // verdict is an uncertified non-pass.
  CHECK_FALSE(oc.om1.holds);
  CHECK(oc.om1.cls == Classification::Growing);
  CHECK_FALSE(oc.om1.certified);
  CHECK(oc.om3.holds);
  CHECK(oc.om4.holds);
  CHECK(oc.om4.cls == Classification::Exact);
  CHECK(oc.om6.holds);
  CHECK(oc.factor_consistent);
  REQUIRE(oc.factor_checks.size() == 2);
  CHECK(oc.factor_checks[0].first == doctest::Approx(1.5));
  CHECK(oc.factor_checks[1].first == doctest::Approx(4.0));
  // The tail integral of the factorial weight outgrows omega itself, but the
  // truncated quadrature cannot certify that; the verdict stays a non-pass
  // with a reported remainder.
  CHECK_FALSE(oc.strong_nq.holds);
}

TEST_CASE("weight-function condition bundle for the q-geometric family") {
  const weightcalc::OmegaConditions oc = weightcalc::omega_conditions(
      weightcalc::omega_of(LogSequence::q_gevrey(2.0, 512)));
  CHECK(oc.om0.holds);
  CHECK(oc.om1.holds);
  CHECK(oc.om1.constant_or("L", 0.0) >= 1.0);
  CHECK(oc.om3.holds);
  CHECK(oc.om4.holds);
  CHECK_FALSE(oc.om6.holds);
  CHECK(oc.factor_consistent);
  CHECK(oc.strong_nq.holds);
  const double c = oc.strong_nq.constant_or("C", 0.0);
  CHECK(c > 1.0);
  CHECK(c < 2.0);
}

TEST_CASE("tail integral ratio on square factorials rises through the probe windows") {
  // The ratio tends to a finite limit near two, but from the smallest probes
  // upward, so the window ladder keeps seeing growth; the quadrature
  // remainder stays small, making this a genuine non-pass at this range
  // rather than a truncation artifact.
  const ConditionVerdict v = weightcalc::strong_nq_check(
      weightcalc::omega_of(LogSequence::gevrey(2.0, 512)));
  CHECK_FALSE(v.holds);
  CHECK(v.cls == Classification::Growing);
  CHECK(v.constant_or("max_remainder_ratio", 1.0) < 0.1);
  CHECK(v.log_sup > 1.9);
  CHECK(v.log_sup < 2.3);
}

TEST_CASE("first-row index wraps the growth index of the generated family") {
  const ConditionVerdict vq = weightcalc::matrix_quotient_root(
      weightcalc::omega_of(LogSequence::q_gevrey(2.0, 512)));
  CHECK(vq.holds);
  CHECK(vq.constant_or("d", 0.0) == 2.0);
  const ConditionVerdict vf = weightcalc::matrix_quotient_root(
      weightcalc::omega_of(LogSequence::gevrey(1.0, 512)));
  CHECK(vf.holds);
  CHECK(vf.constant_or("d", 0.0) == 1.0);
}

TEST_CASE("reported witness constants re-validate over the truncation") {
  // mg witness: M_{p+q} <= C^{p+q+1} M_p M_q.
  const LogSequence m = generic_copy(LogSequence::gevrey(1.0, 512));
  const ConditionVerdict v = weightcalc::has_mg(m);
  REQUIRE(v.holds);
  const double log_c = std::log(v.constant_or("C", 1.0));
  std::size_t bad = 0;
  for (std::size_t p = 0; p <= 512; ++p) {
    for (std::size_t q = 0; q + p <= 512; ++q) {
      const double lhs = m.log_at(p + q);
      const double rhs =
          static_cast<double>(p + q + 1) * log_c + m.log_at(p) + m.log_at(q);
      if (lhs > rhs + 1e-9 * std::max(1.0, std::fabs(rhs))) ++bad;
    }
  }
  CHECK(bad == 0);
  // genmg witness at the exact step: mu_p <= A (M_{2p})^(1/(2p)).
  const LogSequence q2 = LogSequence::q_gevrey(2.0, 256);
  const ConditionVerdict g2 = weightcalc::genmg(q2, 2);
  REQUIRE(g2.holds);
  const double log_a = std::log(g2.constant_or("A", 1.0));
  for (std::size_t p = 1; p <= 128; ++p) {
    const double lhs = q2.quotient_at(p);
    const double rhs = log_a + q2.log_at(2 * p) / (2.0 * p);
    CHECK(lhs <= rhs + 1e-9 * std::max(1.0, std::fabs(rhs)));
  }
}
