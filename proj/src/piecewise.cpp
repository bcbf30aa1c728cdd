#include "piecewise.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "errors.hpp"

namespace weightcalc {

namespace {

double domain_slack(double bound) {
  return 8.0 * std::numeric_limits<double>::epsilon() *
         std::max(1.0, std::fabs(bound));
}

[[noreturn]] void domain_overflow(const char* what, double arg, double bound) {
  throw DomainError(std::string(what) + ": argument " + std::to_string(arg) +
                    " exceeds the validity bound " + std::to_string(bound) +
                    " of the truncated representation");
}

}  // namespace

LogPL LogPL::from_slopes(std::vector<double> breakpoints,
                         std::vector<double> slopes, double u_max) {
  if (breakpoints.empty() || breakpoints.size() != slopes.size()) {
    throw ShapeError("piecewise function needs one slope per breakpoint");
  }
  for (std::size_t i = 1; i < breakpoints.size(); ++i) {
    if (breakpoints[i] < breakpoints[i - 1]) {
      throw ShapeError("breakpoints must be nondecreasing");
    }
    if (slopes[i] < slopes[i - 1]) {
      throw ShapeError("slopes must be nondecreasing (convexity)");
    }
  }
  if (slopes.front() < 0.0) throw ShapeError("slopes must be nonnegative");
  if (u_max < breakpoints.back()) {
    throw ShapeError("validity bound lies before the last breakpoint");
  }
  LogPL f;
  f.breakpoints = std::move(breakpoints);
  f.slopes = std::move(slopes);
  f.u_max = u_max;
  f.values.resize(f.breakpoints.size());
  f.values[0] = 0.0;
  for (std::size_t i = 1; i < f.breakpoints.size(); ++i) {
    f.values[i] = f.values[i - 1] +
                  f.slopes[i - 1] * (f.breakpoints[i] - f.breakpoints[i - 1]);
  }
  return f;
}

double LogPL::eval_log(double u) const {
  if (u > u_max + domain_slack(u_max)) {
    domain_overflow("weight function evaluation", u, u_max);
  }
  if (u <= breakpoints.front()) return 0.0;
  // Last breakpoint index with breakpoints[i] < u; the segment with that index
  // carries the slope. (For repeated breakpoints this lands on the final copy,
  // whose slope is the active one.)
  const auto it = std::lower_bound(breakpoints.begin(), breakpoints.end(), u);
  std::size_t idx = static_cast<std::size_t>(it - breakpoints.begin());
  // it points at the first breakpoint >= u; the active segment starts one back.
  idx = idx == 0 ? 0 : idx - 1;
  return values[idx] + slopes[idx] * (u - breakpoints[idx]);
}

double LogPL::eval_t(double t) const {
  if (t < 0.0) throw DomainError("weight functions are defined for t >= 0");
  if (t == 0.0) return 0.0;
  return eval_log(std::log(t));
}

double ConjugatePL::eval(double x) const {
  if (x < -domain_slack(1.0)) {
    throw DomainError("conjugate is defined for x >= 0");
  }
  if (x > x_max + domain_slack(x_max)) {
    domain_overflow("conjugate evaluation", x, x_max);
  }
  x = std::max(x, 0.0);
  const auto it = std::lower_bound(xs.begin(), xs.end(), x);
  if (it != xs.end() && *it == x) {
    return vals[static_cast<std::size_t>(it - xs.begin())];
  }
  std::size_t hi = static_cast<std::size_t>(it - xs.begin());
  if (hi == xs.size()) hi = xs.size() - 1;  // x within slack of x_max
  if (hi == 0) return vals[0];
  const std::size_t lo = hi - 1;
  const double w = (x - xs[lo]) / (xs[hi] - xs[lo]);
  return vals[lo] + w * (vals[hi] - vals[lo]);
}

ConjugatePL young_conjugate(const LogPL& phi) {
  ConjugatePL g;
  g.xs.push_back(0.0);
  g.vals.push_back(0.0);
  for (std::size_t i = 0; i < phi.slopes.size(); ++i) {
    const double sigma = phi.slopes[i];
    if (sigma == 0.0) continue;                            // zero-tail segment
    if (i > 0 && phi.slopes[i] == phi.slopes[i - 1]) continue;  // same knot
    g.xs.push_back(sigma);
    g.vals.push_back(sigma * phi.breakpoints[i] - phi.values[i]);
  }
  g.x_max = phi.slopes.back();
  return g;
}

ConjugatePL conjugate_sum(const ConjugatePL& g, const ConjugatePL& h) {
  ConjugatePL s;
  s.x_max = std::min(g.x_max, h.x_max);
  std::vector<double> knots;
  knots.reserve(g.xs.size() + h.xs.size());
  for (double x : g.xs) {
    if (x <= s.x_max) knots.push_back(x);
  }
  for (double x : h.xs) {
    if (x <= s.x_max) knots.push_back(x);
  }
  knots.push_back(s.x_max);
  std::sort(knots.begin(), knots.end());
  knots.erase(std::unique(knots.begin(), knots.end()), knots.end());
  s.xs = std::move(knots);
  s.vals.resize(s.xs.size());
  for (std::size_t i = 0; i < s.xs.size(); ++i) {
    s.vals[i] = g.eval(s.xs[i]) + h.eval(s.xs[i]);
  }
  return s;
}

LogPL conjugate_dual(const ConjugatePL& g, double u_max) {
  if (g.xs.size() < 2) throw ShapeError("conjugate with a single knot has no dual");
  std::vector<double> bk;
  std::vector<double> sl;
  bk.reserve(g.xs.size() - 1);
  sl.reserve(g.xs.size() - 1);
  for (std::size_t j = 0; j + 1 < g.xs.size(); ++j) {
    bk.push_back((g.vals[j + 1] - g.vals[j]) / (g.xs[j + 1] - g.xs[j]));
    sl.push_back(g.xs[j + 1]);
  }
  u_max = std::max(u_max, bk.back());  // guard one-ulp overshoot of the last slope
  return LogPL::from_slopes(std::move(bk), std::move(sl), u_max);
}

LogPL lower_legendre_exact(const LogPL& sigma, const LogPL& tau) {
  const ConjugatePL gs = young_conjugate(sigma);
  const ConjugatePL gt = young_conjugate(tau);
  const ConjugatePL sum = conjugate_sum(gs, gt);
  return conjugate_dual(sum, sigma.u_max + tau.u_max);
}

double lower_legendre_point(const LogPL& sigma, const LogPL& tau, double u) {
  const double bound = sigma.u_max + tau.u_max;
  if (u > bound + domain_slack(bound)) {
    domain_overflow("lower Legendre evaluation", u, bound);
  }
  const double v_lo = u - tau.u_max;
  const double v_hi = std::min(sigma.u_max, u + 0.0);  // beyond u the tau side only grows
  // The objective v -> sigma(v) + tau(u - v) is convex piecewise linear on
  // [v_lo, v_hi]; its minimum sits at a breakpoint of either summand or at an
  // endpoint of the feasible interval.
  auto objective = [&](double v) {
    const double a = sigma.eval_log(std::min(v, sigma.u_max));
    const double b = tau.eval_log(std::min(u - v, tau.u_max));
    return a + b;
  };
  double best = std::numeric_limits<double>::infinity();
  auto consider = [&](double v) {
    if (v < v_lo || v > v_hi) return;
    best = std::min(best, objective(v));
  };
  consider(v_lo);
  consider(v_hi);
  for (double b : sigma.breakpoints) consider(b);
  for (double b : tau.breakpoints) consider(u - b);
  if (!std::isfinite(best)) {
    // Feasible interval degenerate (u deep in the joint zero tail).
    best = objective(std::min(v_hi, std::max(v_lo, sigma.breakpoints.front())));
  }
  return best;
}

}  // namespace weightcalc
