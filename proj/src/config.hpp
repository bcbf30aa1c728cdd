#pragma once

#include <cstddef>
#include <cstdint>

namespace weightcalc {

// Knobs shared by the condition checkers, theorem harness, C API, and CLI.
// Defaults match the documented contract; identical config + seed must yield
// byte-identical reports.
struct RunConfig {
  std::size_t truncation = 4096;   // default sequence truncation P
  std::size_t grid_points = 1000;  // probe points for function-grid checks
  std::size_t d_max = 16;          // growth-index search bound
  int ladder_max_exp = 12;         // constants searched over 2^0 .. 2^ladder_max_exp
  double ladder_eps_rel = 0.05;    // plateau tolerance between window sups
  double ladder_eps_final = 0.01;  // plateau tolerance for the last window pair
  std::uint64_t seed = 1;          // random-input seed, echoed in reports
};

}  // namespace weightcalc
