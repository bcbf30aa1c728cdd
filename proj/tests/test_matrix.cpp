#include <cmath>
#include <cstddef>

#include "doctest.h"
#include "errors.hpp"
#include "matrix.hpp"
#include "oracles.hpp"
#include "random_lc.hpp"
#include "sequence.hpp"
#include "weightfun.hpp"

using weightcalc::LogSequence;
using weightcalc::WeightMatrixView;

namespace {

WeightMatrixView matrix_for(const LogSequence& m) {
  return WeightMatrixView(weightcalc::omega_of(m));
}

}  // namespace

TEST_CASE("first row reproduces the generating sequence") {
  for (std::uint64_t seed : {6ULL, 14ULL}) {
    const LogSequence m = weightcalc::random_lc(seed, 64);
    const WeightMatrixView mat = matrix_for(m);
    const LogSequence row = mat.row(1.0);
    REQUIRE(row.truncation() == 64);
    for (std::size_t p = 0; p <= 64; ++p) {
      const double expect = m.log_at(p);
      CHECK(row.log_at(p) == doctest::Approx(expect).epsilon(1e-9).scale(
                                 std::max(1.0, std::fabs(expect))));
    }
  }
}

TEST_CASE("known row values of the built-in families") {
  const WeightMatrixView fact = matrix_for(LogSequence::gevrey(1.0, 24));
  // Row 2 entry 3: half of log(6!).
  CHECK(fact.row(2.0).log_at(3) ==
        doctest::Approx(3.2896256060050505).epsilon(1e-12));
  const WeightMatrixView qg = matrix_for(LogSequence::q_gevrey(2.0, 24));
  // Row 3 entry 2: (1/3) log q^(6*6) = 12 log 2.
  CHECK(qg.row(3.0).log_at(2) ==
        doctest::Approx(8.317766166719343).epsilon(1e-12));
}

TEST_CASE("row truncation scales inversely with the row parameter") {
  const WeightMatrixView mat = matrix_for(LogSequence::gevrey(1.0, 32));
  CHECK(mat.x_max() == 32.0);
  CHECK(mat.truncation_for(1.0) == 32);
  CHECK(mat.truncation_for(2.0) == 16);
  CHECK(mat.truncation_for(0.5) == 64);
  CHECK(mat.row(0.5).truncation() == 64);
  CHECK_THROWS_AS((void)mat.truncation_for(17.0), weightcalc::TruncationError);
  CHECK_THROWS_AS((void)mat.row(17.0), weightcalc::TruncationError);
  CHECK_THROWS_AS((void)mat.truncation_for(0.0), weightcalc::ParamError);
}

TEST_CASE("rows are log-convex and normalized") {
  const WeightMatrixView mat = matrix_for(weightcalc::random_lc(25, 48));
  for (double ell : {0.5, 1.0, 2.0, 4.0}) {
    const LogSequence row = mat.row(ell);
    CHECK(row.is_normalized());
    CHECK(row.is_log_convex().first);
  }
}

TEST_CASE("reindexing identities hold across rows") {
  const WeightMatrixView mat = matrix_for(weightcalc::random_lc(33, 64));
  for (unsigned ell : {2u, 3u}) {
    const weightcalc::TheoremReport rep =
        weightcalc::transform_check(mat, 1.0, ell);
    CHECK(rep.overall == "consistent");
    CHECK_FALSE(rep.directions.empty());
  }
}

TEST_CASE("cross-scale moderate growth holds for every generated family") {
  for (auto make : {+[] { return LogSequence::gevrey(1.0, 48); },
                    +[] { return LogSequence::q_gevrey(2.0, 48); }}) {
    const WeightMatrixView mat = matrix_for(make());
    for (double ell : {1.0, 2.0}) {
      const weightcalc::ConditionVerdict v =
          weightcalc::mixed_mg_check(mat, ell, 40);
      CHECK(v.holds);
      CHECK(v.certified);
    }
  }
}

TEST_CASE("row weights sandwich the generating weight") {
  for (auto make : {+[] { return LogSequence::gevrey(1.0, 64); },
                    +[] { return LogSequence::q_gevrey(2.0, 64); }}) {
    const WeightMatrixView mat = matrix_for(make());
    for (double ell : {1.0, 2.0}) {
      const weightcalc::ConditionVerdict v =
          weightcalc::sandwich_check(mat, ell);
      CHECK(v.holds);
      CHECK(v.certified);
      CHECK(v.constant_or("D", -1.0) >= 0.0);
      // The exact left inequality leaves no positive gap.
      CHECK(v.constant_or("left_max_gap", 1.0) <= 1e-9);
    }
  }
}

TEST_CASE("family comparison finds dominating rows in one direction only") {
  const WeightMatrixView small = matrix_for(LogSequence::gevrey(1.0, 48));
  const WeightMatrixView big = matrix_for(LogSequence::gevrey(2.0, 48));
  const weightcalc::MatrixRelationReport fwd = weightcalc::matrix_relate(
      small, big, weightcalc::MatrixRelateKind::Roumieu);
  CHECK(fwd.holds);
  CHECK(fwd.entries.size() == 5);
  for (const auto& e : fwd.entries) CHECK(e.found);
  const weightcalc::MatrixRelationReport bwd = weightcalc::matrix_relate(
      big, small, weightcalc::MatrixRelateKind::Roumieu);
  CHECK_FALSE(bwd.holds);
}
