#pragma once

#include <cstddef>
#include <cstdint>

#include "sequence.hpp"

namespace weightcalc {

// Deterministic random log-convex normalized sequences for fuzzing. Both
// generators build nondecreasing nonnegative quotient logs, so the output is
// always normalized and log-convex with diverging quotients.

// Heavy-tail generator: quotient increments drawn from an exponential mixture
// with occasional Pareto jumps plus a small positive drift.
LogSequence random_lc(std::uint64_t seed, std::size_t P);

// Gap-splice generator: long constant runs separated by jumps, imitating the
// q-geometric growth mechanism; stresses repeated-breakpoint handling.
LogSequence random_lc_staircase(std::uint64_t seed, std::size_t P);

}  // namespace weightcalc
