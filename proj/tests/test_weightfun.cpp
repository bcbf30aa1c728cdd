#include <cmath>
#include <cstddef>
#include <vector>

#include "doctest.h"
#include "errors.hpp"
#include "oracles.hpp"
#include "piecewise.hpp"
#include "random_lc.hpp"
#include "sequence.hpp"
#include "weightfun.hpp"

using weightcalc::LogPL;
using weightcalc::LogSequence;

TEST_CASE("weight function of the factorial sequence") {
  const LogSequence m = LogSequence::gevrey(1.0, 32);
  const LogPL om = weightcalc::omega_of(m);
  CHECK(om.u_max == m.quotient_at(32));
  CHECK(om.segment_count() == 32);
  CHECK(om.eval_t(3.0) == doctest::Approx(1.5040773967762742).epsilon(1e-13));
  CHECK(om.eval_t(0.0) == 0.0);
  CHECK(om.eval_log(-5.0) == 0.0);  // zero left tail
  CHECK_THROWS_AS((void)om.eval_log(om.u_max + 1.0), weightcalc::DomainError);
  CHECK_THROWS_AS((void)om.eval_t(-1.0), weightcalc::DomainError);
}

TEST_CASE("weight function matches the direct supremum scan") {
  for (std::uint64_t seed : {3ULL, 11ULL, 31ULL}) {
    const LogSequence m = (seed % 2 == 1)
                              ? weightcalc::random_lc(seed, 96)
                              : weightcalc::random_lc_staircase(seed, 96);
    const LogPL om = weightcalc::omega_of(m);
    oracles::SplitMix64 rng(seed);
    for (int i = 0; i < 64; ++i) {
      const double u = rng.uniform01() * om.u_max;
      const double direct = oracles::omega_supscan(m, u);
      CHECK(om.eval_log(u) ==
            doctest::Approx(direct).epsilon(1e-12).scale(
                std::max(1.0, std::fabs(direct))));
    }
  }
}

TEST_CASE("weight function rejects inputs outside the admissible class") {
  const LogSequence bad =
      LogSequence::from_logs({0.0, std::log(3.0), std::log(4.0)});
  CHECK_THROWS_AS((void)weightcalc::omega_of(bad), weightcalc::ParamError);
  const LogSequence tiny = LogSequence::from_logs({0.0, -1.0, -1.5});
  CHECK_THROWS_AS((void)weightcalc::omega_of(tiny), weightcalc::ParamError);
}

TEST_CASE("counting function counts quotients below the argument") {
  const LogSequence m = LogSequence::gevrey(1.0, 16);
  CHECK(weightcalc::counting(m, 3.5) == 3);
  CHECK(weightcalc::counting(m, 3.0) == 3);  // boundary hit counts
  CHECK(weightcalc::counting(m, 0.5) == 0);
  const LogSequence q = LogSequence::q_gevrey(2.0, 16);
  CHECK(weightcalc::counting(q, 8.0) == 2);
  CHECK_THROWS_AS((void)weightcalc::counting(m, 0.0), weightcalc::DomainError);
  CHECK_THROWS_AS((void)weightcalc::counting(m, 17.0),
                  weightcalc::DomainError);

  for (std::uint64_t seed : {5ULL, 23ULL}) {
    const LogSequence r = weightcalc::random_lc(seed, 64);
    oracles::SplitMix64 rng(seed);
    for (int i = 0; i < 32; ++i) {
      const double logt = rng.uniform01() * r.quotient_at(64);
      CHECK(weightcalc::counting(r, std::exp(logt)) ==
            oracles::counting_scan(r, logt));
    }
  }
}

TEST_CASE("conjugate returns the sequence logs at integer arguments") {
  const LogSequence m = LogSequence::gevrey(1.5, 24);
  const LogPL om = weightcalc::omega_of(m);
  const weightcalc::ConjugatePL conj = weightcalc::young_conjugate(om);
  CHECK(conj.x_max == 24.0);
  for (std::size_t p = 0; p <= 24; ++p) {
    const double expect = m.log_at(p);
    CHECK(conj.eval(static_cast<double>(p)) ==
          doctest::Approx(expect).epsilon(1e-12).scale(
              std::max(1.0, std::fabs(expect))));
  }
  CHECK_THROWS_AS((void)conj.eval(-0.5), weightcalc::DomainError);
  CHECK_THROWS_AS((void)conj.eval(25.0), weightcalc::DomainError);
}

TEST_CASE("conjugate agrees with the supremum over breakpoints") {
  const LogSequence m = weightcalc::random_lc(17, 80);
  const LogPL om = weightcalc::omega_of(m);
  const weightcalc::ConjugatePL conj = weightcalc::young_conjugate(om);
  oracles::SplitMix64 rng(17);
  for (int i = 0; i < 64; ++i) {
    const double x = rng.uniform01() * conj.x_max;
    const double direct = oracles::conjugate_supscan(om, x);
    CHECK(conj.eval(x) == doctest::Approx(direct).epsilon(1e-9).scale(
                              std::max(1.0, std::fabs(direct))));
  }
}

TEST_CASE("sequence values are recovered from the weight function") {
  for (std::uint64_t seed : {2ULL, 9ULL, 27ULL}) {
    const LogSequence m = (seed % 2 == 0)
                              ? weightcalc::random_lc(seed, 64)
                              : weightcalc::random_lc_staircase(seed, 64);
    const LogPL om = weightcalc::omega_of(m);
    for (std::size_t p = 0; p <= 64; ++p) {
      const double rec = weightcalc::reconstruct(om, p);
      const double expect = m.log_at(p);
      CHECK(rec == doctest::Approx(expect).epsilon(1e-10).scale(
                       std::max(1.0, std::fabs(expect))));
    }
    CHECK_THROWS_AS((void)weightcalc::reconstruct(om, 65),
                    weightcalc::DomainError);
  }
}

TEST_CASE("real powers substitute into the argument of the weight") {
  const LogSequence m = LogSequence::gevrey(1.0, 48);
  oracles::SplitMix64 rng(8);
  for (double ell : {2.0, 3.0}) {
    for (int i = 0; i < 40; ++i) {
      const double u_hi = weightcalc::power(m, ell).quotient_at(48);
      const double u = rng.uniform01() * u_hi;
      const auto [lhs, rhs] = weightcalc::power_identity_check(m, ell, u);
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12).scale(
                       std::max(1.0, std::fabs(rhs))));
    }
  }
}

TEST_CASE("convolution adds weight functions pointwise") {
  const LogSequence m = LogSequence::gevrey(1.0, 40);
  const LogSequence n = LogSequence::q_gevrey(1.5, 40);
  const double hi = std::min(m.quotient_at(40), n.quotient_at(40));
  oracles::SplitMix64 rng(21);
  for (int i = 0; i < 64; ++i) {
    const double u = rng.uniform01() * hi;
    const auto [lhs, rhs] = weightcalc::star_additivity_check(m, n, u);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12).scale(
                     std::max(1.0, std::fabs(rhs))));
  }
}

TEST_CASE("product weight equals the lower envelope of the factors") {
  for (std::uint64_t seed : {4ULL, 13ULL}) {
    const LogSequence m = weightcalc::random_lc(seed, 48);
    const LogSequence n = weightcalc::random_lc(seed + 100, 48);
    const LogPL om_m = weightcalc::omega_of(m);
    const LogPL om_n = weightcalc::omega_of(n);
    const LogPL om_prod = weightcalc::omega_of(weightcalc::product(m, n));
    const LogPL env = weightcalc::lower_legendre_exact(om_m, om_n);
    oracles::SplitMix64 rng(seed);
    for (int i = 0; i < 64; ++i) {
      const double u = rng.uniform01() * om_prod.u_max;
      const double expect = om_prod.eval_log(u);
      const double via_env = env.eval_log(u);
      const double via_point = weightcalc::lower_legendre_point(om_m, om_n, u);
      const double via_scan = oracles::envelope_minscan(om_m, om_n, u);
      const double tol = 1e-9 * std::max(1.0, std::fabs(expect));
      CHECK(std::fabs(via_env - expect) <= tol);
      CHECK(std::fabs(via_point - expect) <= tol);
      CHECK(std::fabs(via_scan - expect) <= tol);
    }
  }
}

TEST_CASE("decay-weighted tail integral matches the closed form") {
  const LogSequence m = LogSequence::gevrey(2.0, 24);
  const LogPL om = weightcalc::omega_of(m);
  for (double logy : {0.0, 0.7, 2.0}) {
    const auto [value, remainder] = weightcalc::omega_tail_integral(om, logy);
    const double direct = oracles::tail_integral_scan(om, logy);
    // The production route is adaptive quadrature; only the oracle integrates
    // each piece in closed form, so agreement is at quadrature accuracy.
    CHECK(value == doctest::Approx(direct).epsilon(1e-6).scale(
                       std::max(1.0, std::fabs(direct))));
    CHECK(remainder >= 0.0);
  }
  CHECK_THROWS_AS((void)weightcalc::omega_tail_integral(om, om.u_max + 1.0),
                  weightcalc::DomainError);
}

TEST_CASE("piecewise shape validation rejects broken input") {
  CHECK_THROWS_AS(LogPL::from_slopes({0.0, 1.0}, {1.0}, 2.0),
                  weightcalc::ShapeError);
  CHECK_THROWS_AS(LogPL::from_slopes({1.0, 0.0}, {1.0, 2.0}, 2.0),
                  weightcalc::ShapeError);
  CHECK_THROWS_AS(LogPL::from_slopes({0.0, 1.0}, {2.0, 1.0}, 2.0),
                  weightcalc::ShapeError);
  CHECK_THROWS_AS(LogPL::from_slopes({0.0, 1.0}, {1.0, 2.0}, 0.5),
                  weightcalc::ShapeError);
}
