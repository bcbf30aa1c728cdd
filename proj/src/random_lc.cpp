#include "random_lc.hpp"

#include <cmath>
#include <random>
#include <vector>

namespace weightcalc {

namespace {

// Top 53 bits to a double in [0, 1). std::uniform_real_distribution is
// implementation-defined, which would break cross-platform byte-identical
// reports, so the mapping is done by hand.
double next_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

LogSequence random_lc(std::uint64_t seed, std::size_t P) {
  std::mt19937_64 rng(seed);
  std::vector<double> quot(P);
  double cur = 0.5 * next_uniform(rng);  // first quotient log in [0, 0.5)
  for (std::size_t p = 1; p <= P; ++p) {
    if (p > 1) {
      double inc = 0.002 + 0.05 * (-std::log1p(-next_uniform(rng)));
      if (next_uniform(rng) < 0.05) {
        // Pareto(2) jump: heavy tail with finite mean.
        inc += 1.0 / std::sqrt(1.0 - next_uniform(rng)) - 1.0;
      }
      cur += inc;
    }
    quot[p - 1] = cur;
  }
  return LogSequence::from_quotients(std::move(quot));
}

LogSequence random_lc_staircase(std::uint64_t seed, std::size_t P) {
  std::mt19937_64 rng(seed ^ 0xD1B54A32D192ED03ULL);
  std::vector<double> quot(P);
  double cur = 0.0;
  std::size_t p = 0;
  while (p < P) {
    const std::size_t run =
        1 + static_cast<std::size_t>(next_uniform(rng) * 12.0);
    cur += 0.1 + 3.0 * next_uniform(rng);
    for (std::size_t i = 0; i < run && p < P; ++i, ++p) quot[p] = cur;
  }
  return LogSequence::from_quotients(std::move(quot));
}

}  // namespace weightcalc
