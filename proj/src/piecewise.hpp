#pragma once

#include <cstddef>
#include <vector>

namespace weightcalc {

// Convex piecewise-linear function of u = log t with a zero left tail:
// value 0 for u <= breakpoints[0], slope slopes[i] on [breakpoints[i],
// breakpoints[i+1]) and slopes.back() up to the validity bound u_max.
// values[i] is the value at breakpoints[i]; values[0] == 0. Repeated
// breakpoints (zero-length segments) are legal and encode slope jumps.
struct LogPL {
  std::vector<double> breakpoints;
  std::vector<double> values;
  std::vector<double> slopes;
  double u_max = 0.0;

  // Builds values incrementally from breakpoints and slopes; validates shape
  // (nondecreasing breakpoints, nondecreasing nonnegative slopes).
  static LogPL from_slopes(std::vector<double> breakpoints,
                           std::vector<double> slopes, double u_max);

  double eval_log(double u) const;  // u beyond u_max (+ slack) -> DomainError
  double eval_t(double t) const;    // t in linear scale; eval_t(0) = 0
  double final_slope() const { return slopes.back(); }
  std::size_t segment_count() const { return slopes.size(); }
};

// Convex nondecreasing piecewise-linear conjugate on [0, x_max], stored by its
// knots; knots[0] = (0, 0), strictly increasing x.
struct ConjugatePL {
  std::vector<double> xs;
  std::vector<double> vals;
  double x_max = 0.0;

  double eval(double x) const;  // x < 0 or x beyond x_max (+ slack) -> DomainError
};

// Legendre transform phi -> phi*: knots at the distinct slope values of phi,
// phi*(sigma) = sigma * b - phi(b) at the first breakpoint b of the sigma
// segment; x_max is the final slope.
ConjugatePL young_conjugate(const LogPL& phi);

// Pointwise sum of conjugates on the union of their knots, restricted to
// x <= min(x_max, y_max).
ConjugatePL conjugate_sum(const ConjugatePL& g, const ConjugatePL& h);

// Inverse transform g -> g* as a LogPL: breakpoints at the segment slopes of g,
// slopes at the knot abscissae, validity bound supplied by the caller.
LogPL conjugate_dual(const ConjugatePL& g, double u_max);

// Lower Legendre envelope (sigma, tau) -> inf_{s>0} sigma(s) + tau(t/s).
// Whole-function route: sum of conjugates, then dual; valid up to
// sigma.u_max + tau.u_max.
LogPL lower_legendre_exact(const LogPL& sigma, const LogPL& tau);
// Pointwise route: exact minimum of the convex objective over its breakpoint
// candidates; agrees with the whole-function route on the common validity range.
double lower_legendre_point(const LogPL& sigma, const LogPL& tau, double u);

}  // namespace weightcalc
