#pragma once

// Independent reference implementations used only by the tests. Everything the
// library computes through its piecewise-linear machinery is re-derived here by
// direct scans over the defining formulas, so agreement is meaningful.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "piecewise.hpp"
#include "sequence.hpp"

namespace oracles {

// sup_{0 <= p <= P} (p u - log M_p); the p = 0 term clamps at 0.
inline double omega_supscan(const weightcalc::LogSequence& m, double u) {
  double best = 0.0;
  for (std::size_t p = 1; p <= m.truncation(); ++p)
    best = std::max(best, static_cast<double>(p) * u - m.log_at(p));
  return best;
}

// Direct minimum over splittings: log (M*N)_p = min_q (log M_q + log N_{p-q}).
inline std::vector<double> convolve_minscan(const weightcalc::LogSequence& m,
                                            const weightcalc::LogSequence& n) {
  const std::size_t pm = m.truncation();
  const std::size_t pn = n.truncation();
  std::vector<double> out(pm + pn + 1, 0.0);
  for (std::size_t p = 0; p <= pm + pn; ++p) {
    double best = std::numeric_limits<double>::infinity();
    const std::size_t q_lo = p > pn ? p - pn : 0;
    const std::size_t q_hi = std::min(p, pm);
    for (std::size_t q = q_lo; q <= q_hi; ++q)
      best = std::min(best, m.log_at(q) + n.log_at(p - q));
    out[p] = best;
  }
  return out;
}

// Number of quotient indices with log mu_p <= logt, by linear scan with a tiny
// relative slack so exact boundary hits count.
inline std::size_t counting_scan(const weightcalc::LogSequence& m,
                                 double logt) {
  std::size_t count = 0;
  for (std::size_t p = 1; p <= m.truncation(); ++p) {
    const double q = m.quotient_at(p);
    const double slack =
        1e-12 * std::max({1.0, std::fabs(q), std::fabs(logt)});
    if (q <= logt + slack) ++count;
  }
  return count;
}

// sup_u (x u - phi(u)) for the convex piecewise-linear phi with zero left
// tail; the supremum sits at a breakpoint or at the validity bound. Valid for
// 0 <= x <= final slope.
inline double conjugate_supscan(const weightcalc::LogPL& phi, double x) {
  double best = x * phi.breakpoints.front();
  for (std::size_t i = 0; i < phi.breakpoints.size(); ++i)
    best = std::max(best, x * phi.breakpoints[i] - phi.values[i]);
  best = std::max(best, x * phi.u_max - phi.eval_log(phi.u_max));
  return best;
}

// Pointwise lower envelope inf_s sigma(s) + tau(u - s): exact because the
// objective is piecewise linear in s with kinks only at breakpoints of either
// factor. Requires u <= sigma.u_max + tau.u_max.
inline double envelope_minscan(const weightcalc::LogPL& sig,
                               const weightcalc::LogPL& tau, double u) {
  const double lo = u - tau.u_max;
  const double hi = sig.u_max;
  std::vector<double> cand{lo, hi};
  for (double b : sig.breakpoints)
    if (b >= lo && b <= hi) cand.push_back(b);
  for (double b : tau.breakpoints) {
    const double s = u - b;
    if (s >= lo && s <= hi) cand.push_back(s);
  }
  double best = std::numeric_limits<double>::infinity();
  for (double s : cand)
    best = std::min(best, sig.eval_log(s) + tau.eval_log(u - s));
  return best;
}

// Integral of (alpha + beta v) e^{-v} over [v0, v1], closed form.
inline double decay_segment_integral(double alpha, double beta, double v0,
                                     double v1) {
  const auto antiderivative = [&](double v) {
    return -std::exp(-v) * (alpha + beta * v + beta);
  };
  return antiderivative(v1) - antiderivative(v0);
}

// Integral of omega(y e^v) e^{-v} dv over [0, u_max - log y], assembled from
// exact per-segment closed forms.
inline double tail_integral_scan(const weightcalc::LogPL& om, double logy) {
  const double V = om.u_max - logy;
  std::vector<double> knots{0.0, V};
  for (double b : om.breakpoints) {
    const double v = b - logy;
    if (v > 0.0 && v < V) knots.push_back(v);
  }
  std::sort(knots.begin(), knots.end());
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    const double v0 = knots[i];
    const double v1 = knots[i + 1];
    if (!(v1 > v0)) continue;
    const double f0 = om.eval_log(logy + v0);
    const double f1 = om.eval_log(logy + v1);
    const double beta = (f1 - f0) / (v1 - v0);
    const double alpha = f0 - beta * v0;
    total += decay_segment_integral(alpha, beta, v0, v1);
  }
  return total;
}

// Deterministic probe generator for the tests (no library RNG involved).
struct SplitMix64 {
  std::uint64_t s;
  explicit SplitMix64(std::uint64_t seed) : s(seed) {}
  std::uint64_t next() {
    s += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  double uniform01() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }
};

}  // namespace oracles
