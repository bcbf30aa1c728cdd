#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "piecewise.hpp"
#include "sequence.hpp"

namespace weightcalc {

// Associated weight function of a log-convex normalized sequence, as a function
// of u = log t: breakpoints at the quotient logs (with multiplicity), slope p
// after the p-th quotient, validity bound log mu_P. Rejects inputs that are not
// log-convex or not normalized (apply lc_regularize first).
LogPL omega_of(const LogSequence& m);

// Number of quotient indices p >= 1 with mu_p <= t (multiplicity counted; the
// comparison carries a few-ulp slack so exact boundary hits count). Requires
// t <= mu_P.
std::size_t counting(const LogSequence& m, double t);

// log sup_{t} t^p / exp(omega(t)) over the represented range; p must not exceed
// the final slope. Recovers log M_p from omega_of(M).
double reconstruct(const LogPL& omega, std::size_t p);

// Both sides of the power substitution identity at t = e^u:
// first = omega_{M^ell}(t), second = ell * omega_M(t^{1/ell}).
std::pair<double, double> power_identity_check(const LogSequence& m, double ell,
                                               double u);

// Both sides of convolution additivity at t = e^u:
// first = omega_{M*N}(t), second = omega_M(t) + omega_N(t).
std::pair<double, double> star_additivity_check(const LogSequence& m,
                                                const LogSequence& n, double u);

// All u-values where the shifted copies of f and g change slope inside [lo, hi],
// plus the endpoints: the exact candidate set for extrema of piecewise-linear
// combinations u -> a f(u) + b g(u + shift).
std::vector<double> pl_candidates(const LogPL& f, const LogPL& g, double shift,
                                  double lo, double hi);
// Same for a single function.
std::vector<double> pl_candidates(const LogPL& f, double lo, double hi);

// Evenly spaced u-grid with n points on [lo, hi] (n >= 1).
std::vector<double> make_u_grid(double lo, double hi, std::size_t n);

// Integral of omega(y e^v) e^{-v} dv over [0, V] with V = u_max - log y,
// by adaptive trapezoid refined at the breakpoints; second value is the
// truncation remainder bound (omega(e^{u_max}) + final slope) e^{-V}.
std::pair<double, double> omega_tail_integral(const LogPL& omega, double logy);

}  // namespace weightcalc
