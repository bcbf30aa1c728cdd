#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "config.hpp"
#include "piecewise.hpp"
#include "report.hpp"
#include "sequence.hpp"

namespace weightcalc {

// Verification harness: each operation checks the directions of one named
// result on the supplied inputs and emits a TheoremReport. Constants that come
// with a stated recipe are asserted with those exact values; constants without
// a recipe are searched over the doubling ladder {2^k, k <= ladder_max_exp}.
// Sequence-side assertions are exhaustive over the truncation; function-side
// assertions evaluate exactly on the kink candidate sets.

// Tilde-versus-weight comparison: omega_tilde(t) <= (1/a) omega(t) (exact) and
// (1/a) omega(t) <= 2 omega_tilde(t) + D with empirical D.
TheoremReport verify_tilde_omega_comparison(const LogSequence& m, unsigned a,
                                            const RunConfig& cfg = {});

// Equivalence of convolution absorption, the weight-difference bound, and
// dominance of the convolution, with the stated constant transfers.
TheoremReport verify_absorption_equivalence(const LogSequence& m,
                                            const LogSequence& l, unsigned a,
                                            const RunConfig& cfg = {});

// Self case: the weight-difference bound at step 1 versus absorption at
// factor 2 versus moderate growth.
TheoremReport verify_absorption_mg(const LogSequence& m,
                                   const RunConfig& cfg = {});

// Doubling bound L_{2p} <= B^p L_p Mt_p, its two-index form, and the mixed
// quotient-root condition, with the stated same-constant transfers.
TheoremReport verify_doubling_absorption(const LogSequence& m,
                                         const LogSequence& l, unsigned a,
                                         const RunConfig& cfg = {});

// Consequence chain of the mixed quotient-root condition through quotient,
// counting, weight, and pair bounds, plus the stated partial converse.
TheoremReport verify_doubling_consequences(const LogSequence& m,
                                           const LogSequence& l, unsigned a,
                                           const RunConfig& cfg = {});

// Stability of the finite growth index under equivalence of sequences.
TheoremReport verify_index_equivalence_stability(const LogSequence& m,
                                                 const LogSequence& n,
                                                 const RunConfig& cfg = {});

// Growth-index comparison between matrix rows at x, cx, and x/c.
TheoremReport verify_matrix_index_comparison(const LogPL& omega, double x,
                                             unsigned c,
                                             const RunConfig& cfg = {});

// Transfer of sequence dominance to the generated matrices, with the stated
// constants C and C_x.
TheoremReport verify_matrix_equivalence_transfer(const LogSequence& m,
                                                 const LogSequence& n,
                                                 const RunConfig& cfg = {});

// Power comparison: the weight bound with substituted power argument versus
// the doubled-index sequence bound, constants A1 = e^C and B = A.
TheoremReport verify_power_comparison(const LogSequence& m,
                                      const LogSequence& n, unsigned ell,
                                      const RunConfig& cfg = {});

// Square-variable transfer between the doubling sequence bound and the
// envelope bound at t^2; forward A = sqrt(B), C = 0, backward B = e^C A^2.
TheoremReport verify_square_variable_transfer(const LogSequence& m,
                                              const LogSequence& n,
                                              const LogSequence& l, unsigned a,
                                              const RunConfig& cfg = {});

// Self case (L = N): absorption of the convolution, the product-weight bound
// at t^2, and the mixed quotient-root condition.
TheoremReport verify_mixed_index_transfer(const LogSequence& m,
                                          const LogSequence& l, unsigned a,
                                          const RunConfig& cfg = {});

// Finite growth index versus the product-weight bound at t^2 (a = 2d one way,
// d = a back); the a = 1 case coincides with absorption at factor 2.
TheoremReport verify_index_omega_characterization(const LogSequence& m,
                                                  unsigned a,
                                                  const RunConfig& cfg = {});

// Sufficient and necessary square-variable bounds around the envelope form,
// with the stated doubling of constants on the necessary side.
TheoremReport verify_square_variable_bounds(const LogSequence& m,
                                            const LogSequence& n,
                                            const LogSequence& l, unsigned a,
                                            const RunConfig& cfg = {});

// Self-convolution characterizations of absorption at factor 2, of the
// doubling bound, and of the finite growth index of the first matrix row.
TheoremReport verify_self_convolution_characterizations(
    const LogPL& omega, const RunConfig& cfg = {});

// Matrix-row difference bounds implied by absorption at factor 2, and the
// closing dominance criterion between rows that implies it back.
TheoremReport verify_matrix_absorption_omega6(
    const LogPL& omega,
    const std::vector<std::pair<double, double>>& probes = {{1.0, 2.0},
                                                           {1.0, 4.0}},
    const RunConfig& cfg = {});

// Unconditional ratio-root displays with constants 1 for every log-convex
// sequence and every integer step >= 2, plus the informational companions.
TheoremReport verify_ratio_root_bounds(const std::vector<LogSequence>& ms,
                                       const std::vector<unsigned>& ells,
                                       const RunConfig& cfg = {});

// Product weight equals the lower envelope of the factor weights; counting
// and weight additivity of the convolution; equivalence with the
// self-convolution characterizes moderate growth.
TheoremReport verify_product_convolution(const LogSequence& m,
                                         const LogSequence& n,
                                         const RunConfig& cfg = {});

// Quotient sandwich of the tilde transform, composition of tilde steps,
// dominance versus moderate growth, and the matrix-row quotient identities.
TheoremReport verify_tilde_quotient_sandwich(const LogSequence& m, unsigned a,
                                             unsigned c,
                                             const RunConfig& cfg = {});

// Unconditional mixed moderate growth across matrix scales.
TheoremReport verify_matrix_moderate_growth(const LogPL& omega, double ell,
                                            const RunConfig& cfg = {});

// Two-sided comparison between the weight and its row weights.
TheoremReport verify_matrix_sandwich(const LogPL& omega,
                                     const RunConfig& cfg = {});

// Row reindexing identities; optionally checks the first row against the
// generating sequence.
TheoremReport verify_matrix_reindexing(const LogPL& omega, double x,
                                       unsigned ell,
                                       const LogSequence* base = nullptr,
                                       const RunConfig& cfg = {});

// Power substitution identity for the weight of a real power.
TheoremReport verify_power_substitution(const LogSequence& m, double ell,
                                        const RunConfig& cfg = {});

// Registry ----------------------------------------------------------------

// Fixed list of verify ids accepted by run_verify, in suite order.
const std::vector<std::string>& verify_ids();

// Dispatch by id. inputs[0] is the principal sequence (required); inputs[1]
// and inputs[2] supply the second and third sequence where the check takes
// them (defaulting to the principal one). Scale parameters default to the
// standard instantiation derived from the principal sequence.
TheoremReport run_verify(const std::string& id,
                         const std::vector<LogSequence>& inputs,
                         const RunConfig& cfg = {});

struct SuiteResult {
  std::string family;
  std::uint64_t seed = 0;
  std::size_t truncation = 0;
  std::vector<TheoremReport> reports;
  std::string overall;  // worst of the report statuses
};

// Full suite on one family instantiation: every registry id once, with the
// second sequence a geometric rescale and scale steps derived from the growth
// index. Checks run concurrently; aggregation order is fixed.
SuiteResult verify_all(const LogSequence& m, const std::string& family_label,
                       const RunConfig& cfg = {});

}  // namespace weightcalc
