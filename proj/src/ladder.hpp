#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace weightcalc {

// Trichotomy for finite-truncation evidence:
//   Exact    - decided by a closed form or an exhaustive finite-range check;
//   Plateau  - heuristic evidence that the quantity stabilises (condition holds);
//   Growing  - the quantity keeps increasing across windows (condition fails).
enum class Classification { Exact, Plateau, Growing };

inline const char* to_string(Classification c) {
  switch (c) {
    case Classification::Exact: return "exact";
    case Classification::Plateau: return "plateau";
    case Classification::Growing: return "growing";
  }
  return "?";
}

struct LadderPoint {
  std::size_t window = 0;  // number of leading profile entries covered
  double sup = 0.0;        // running maximum over that prefix
};

struct LadderResult {
  std::vector<LadderPoint> points;
  Classification cls = Classification::Growing;
  double final_sup = 0.0;       // running max over the whole profile
  std::size_t argmax = 0;       // 0-based index attaining final_sup
};

// Relative gap used by the plateau test; the max(1,...) clamp keeps profiles
// that hover near zero from producing spurious huge relative differences.
inline double ladder_rel_gap(double a, double b) {
  const double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
  return (b - a) / scale;
}

// Windowed cumulative-supremum classifier. Windows sit at 1/8, 1/4, 1/2 and all
// of the profile length; the profile is "plateau" when every consecutive pair of
// window suprema agrees to eps_rel and the final pair to eps_final, else
// "growing". Profiles shorter than 8 entries use whatever distinct windows exist.
inline LadderResult classify_profile(std::span<const double> profile,
                                     double eps_rel = 0.05,
                                     double eps_final = 0.01) {
  LadderResult out;
  const std::size_t n = profile.size();
  if (n == 0) {
    out.cls = Classification::Plateau;
    return out;
  }
  double running = profile[0];
  out.argmax = 0;
  std::vector<double> cumulative(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (profile[i] > running) {
      running = profile[i];
      out.argmax = i;
    }
    cumulative[i] = running;
  }
  out.final_sup = running;

  std::vector<std::size_t> windows;
  for (std::size_t div : {std::size_t{8}, std::size_t{4}, std::size_t{2}, std::size_t{1}}) {
    std::size_t w = std::max<std::size_t>(1, n / div);
    if (windows.empty() || windows.back() != w) windows.push_back(w);
  }
  for (std::size_t w : windows) {
    out.points.push_back({w, cumulative[w - 1]});
  }
  bool plateau = true;
  for (std::size_t i = 0; i + 1 < out.points.size(); ++i) {
    const double gap = ladder_rel_gap(out.points[i].sup, out.points[i + 1].sup);
    if (gap > eps_rel) plateau = false;
    if (i + 2 == out.points.size() && gap > eps_final) plateau = false;
  }
  out.cls = plateau ? Classification::Plateau : Classification::Growing;
  return out;
}

// Decay classifier for o(.)-style conditions: band (not cumulative) maxima over
// the same windows must fall by at least 5% overall and must not rise at the end.
struct DecayResult {
  std::vector<LadderPoint> band_max;
  bool decays = false;
  double final_band = 0.0;
};

inline DecayResult classify_decay(std::span<const double> profile) {
  DecayResult out;
  const std::size_t n = profile.size();
  if (n == 0) return out;
  std::vector<std::size_t> windows;
  for (std::size_t div : {std::size_t{8}, std::size_t{4}, std::size_t{2}, std::size_t{1}}) {
    std::size_t w = std::max<std::size_t>(1, n / div);
    if (windows.empty() || windows.back() != w) windows.push_back(w);
  }
  std::size_t lo = 0;
  for (std::size_t w : windows) {
    double band = -HUGE_VAL;
    for (std::size_t i = lo; i < w; ++i) band = std::max(band, profile[i]);
    if (lo == w) band = profile[w - 1];  // degenerate repeat window
    out.band_max.push_back({w, band});
    lo = w;
  }
  out.final_band = out.band_max.back().sup;
  if (out.band_max.size() < 2) {
    out.decays = false;
    return out;
  }
  const double first = out.band_max.front().sup;
  const double prev = out.band_max[out.band_max.size() - 2].sup;
  const double last = out.final_band;
  out.decays = (last <= 0.95 * first) && (last <= prev * 1.0000001 + 1e-300);
  return out;
}

}  // namespace weightcalc
