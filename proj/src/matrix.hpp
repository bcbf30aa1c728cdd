#pragma once

#include <cstddef>
#include <map>
#include <mutex>
#include <vector>

#include "config.hpp"
#include "piecewise.hpp"
#include "report.hpp"
#include "sequence.hpp"
#include "verdict.hpp"

namespace weightcalc {

// Family of sequences associated with a weight function: row ell has entries
// exp((1/ell) conj(ell p)) for p up to floor(x_max / ell). Rows are built
// lazily and cached; the cache is guarded for concurrent readers.
class WeightMatrixView {
public:
  explicit WeightMatrixView(LogPL omega);

  const LogPL& omega() const { return omega_; }
  const ConjugatePL& conjugate() const { return conj_; }
  double x_max() const { return conj_.x_max; }

  // floor(x_max / ell) with an ulp guard; throws TruncationError below 2.
  std::size_t truncation_for(double ell) const;
  // The row as a LogSequence (copy of the cached value).
  LogSequence row(double ell) const;

private:
  LogPL omega_;
  ConjugatePL conj_;
  mutable std::mutex mu_;
  mutable std::map<double, LogSequence> cache_;
};

inline WeightMatrixView matrix_of(const LogPL& omega) {
  return WeightMatrixView(omega);
}

// Reindexing identities between rows: row(ell*x)_p vs row(x)_{ell p}^{1/ell},
// row(x/ell)_{p ell} vs row(x)_p^ell, and the tilde form of the same statement.
// All are exact up to float reassociation (checked at relative 1e-12).
TheoremReport transform_check(const WeightMatrixView& mat, double x,
                              unsigned ell);

// Exhaustive mixed moderate growth across scales:
// row(ell)_{p+q} <= row(2 ell)_p row(2 ell)_q for all represented p, q.
ConditionVerdict mixed_mg_check(const WeightMatrixView& mat, double ell,
                                std::size_t n_max);

// Sandwich between omega and its row weight: left inequality
// ell * omega_row(t) <= omega(t) exactly on the candidate set; right inequality
// empirically via D = sup omega(t) - 2 ell omega_row(t) with a plateau flag.
ConditionVerdict sandwich_check(const WeightMatrixView& mat, double ell,
                                const RunConfig& cfg = {});

enum class MatrixRelateKind { Roumieu, Beurling };

struct MatrixRelationEntry {
  double x = 0.0;
  double y = 0.0;
  bool found = false;
  ConditionVerdict verdict;
};

struct MatrixRelationReport {
  MatrixRelateKind kind = MatrixRelateKind::Roumieu;
  bool holds = false;
  std::vector<MatrixRelationEntry> entries;
};

// Roumieu: for each probe x find y on the doubling ladder with
// row_A(x) dominated by row_B(y); Beurling: for each probe x find y with
// row_A(y) dominated by row_B(x), y on the halving ladder.
MatrixRelationReport matrix_relate(const WeightMatrixView& a,
                                   const WeightMatrixView& b,
                                   MatrixRelateKind kind,
                                   const std::vector<double>& probes = {
                                       0.25, 0.5, 1.0, 2.0, 4.0});

}  // namespace weightcalc
