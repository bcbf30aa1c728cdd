#include "conditions.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>

#include "errors.hpp"
#include "matrix.hpp"
#include "weightfun.hpp"

namespace weightcalc {

namespace {

bool quotients_all_equal(const LogSequence& m) {
  const auto& q = m.quotients();
  for (std::size_t p = 2; p < q.size(); ++p) {
    if (q[p] != q[1]) return false;
  }
  return q.size() > 1;
}

void attach_ladder(ConditionVerdict& v, const LadderResult& lad) {
  v.ladder = lad.points;
  v.log_sup = lad.final_sup;
  v.witness_index = lad.argmax + 1;  // profiles are 1-based in p (or n)
}

double exp_witness(double log_sup) { return std::exp(std::max(0.0, log_sup)); }

}  // namespace

ConditionVerdict has_mg(const LogSequence& m, const RunConfig& cfg) {
  ConditionVerdict v;
  v.id = "mg";
  const std::size_t P = m.truncation();
  if (P == 0) throw ShapeError("moderate-growth check needs a nonempty sequence");

  // Flatten the pair profile per n = p+q: the inner minimum of
  // log M_p + log M_q is the self-convolution at n.
  const bool lc = m.is_normalized() && m.is_log_convex().first;
  const LogSequence conv = lc ? convolve(m, m) : convolve_direct(m, m);
  std::vector<double> profile(P);
  for (std::size_t n = 1; n <= P; ++n) {
    profile[n - 1] = (m.log_at(n) - conv.log_at(n)) /
                     static_cast<double>(n + 1);
  }
  const LadderResult lad =
      classify_profile(profile, cfg.ladder_eps_rel, cfg.ladder_eps_final);
  attach_ladder(v, lad);

  const Provenance& pr = m.provenance();
  if (pr.kind == FamilyKind::Gevrey) {
    v.holds = true;
    v.cls = Classification::Exact;
    v.certified = true;
    v.set_constant("C", std::pow(2.0, pr.param));
    v.note = "binomial bound: the central ratio stays below 2^(s(p+q))";
  } else if (pr.kind == FamilyKind::QGevrey) {
    v.holds = false;
    v.cls = Classification::Growing;
    v.certified = true;
    v.note = "closed form: the pair ratio exponent 2pq log q is unbounded";
  } else if (quotients_all_equal(m)) {
    v.holds = true;
    v.cls = Classification::Exact;
    v.certified = true;
    v.set_constant("C", 1.0);
    v.note = "constant quotients make the pair ratio identically zero";
  } else {
    v.holds = lad.cls == Classification::Plateau;
    v.cls = lad.cls;
    v.certified = false;
    if (v.holds) v.set_constant("C", exp_witness(lad.final_sup));
    v.note = v.holds ? "window suprema stabilise"
                     : "window suprema keep increasing at this truncation";
  }
  return v;
}

ConditionVerdict mg_root_quotient(const LogSequence& m, const RunConfig& cfg) {
  ConditionVerdict v;
  v.id = "mg-root";
  const std::size_t P = m.truncation();
  if (P == 0) throw ShapeError("root-quotient check needs a nonempty sequence");
  std::vector<double> profile(P);
  for (std::size_t p = 1; p <= P; ++p) {
    profile[p - 1] = m.quotient_at(p) - m.log_at(p) / static_cast<double>(p);
  }
  const LadderResult lad =
      classify_profile(profile, cfg.ladder_eps_rel, cfg.ladder_eps_final);
  attach_ladder(v, lad);

  const Provenance& pr = m.provenance();
  if (pr.kind == FamilyKind::QGevrey) {
    v.holds = false;
    v.cls = Classification::Growing;
    v.certified = true;
    v.note = "closed form: the ratio exponent (p-1) log q is unbounded";
  } else if (quotients_all_equal(m)) {
    v.holds = true;
    v.cls = Classification::Exact;
    v.certified = true;
    v.set_constant("A", 1.0);
    v.note = "constant quotients make the ratio identically one";
  } else {
    v.holds = lad.cls == Classification::Plateau;
    v.cls = lad.cls;
    v.certified = false;
    if (v.holds) v.set_constant("A", exp_witness(lad.final_sup));
    v.note = v.holds ? "window suprema stabilise"
                     : "window suprema keep increasing at this truncation";
  }
  return v;
}

ConditionVerdict genmg(const LogSequence& m, std::size_t d,
                       const RunConfig& cfg) {
  if (d == 0) throw ParamError("scale step d must be a positive integer");
  const std::size_t P = m.truncation();
  if (d > P) {
    throw TruncationError("scale step " + std::to_string(d) +
                          " exceeds the truncation " + std::to_string(P));
  }
  ConditionVerdict v;
  v.id = "genmg";
  v.set_constant("d", static_cast<double>(d));
  const std::size_t Pd = P / d;
  std::vector<double> profile(Pd);
  for (std::size_t p = 1; p <= Pd; ++p) {
    profile[p - 1] =
        m.quotient_at(p) - m.log_at(d * p) / static_cast<double>(d * p);
  }
  const LadderResult lad =
      classify_profile(profile, cfg.ladder_eps_rel, cfg.ladder_eps_final);
  attach_ladder(v, lad);

  const Provenance& pr = m.provenance();
  if (pr.kind == FamilyKind::QGevrey) {
    // Ratio in closed form: q^((2-d)p - 1).
    if (d == 1) {
      v.holds = false;
      v.cls = Classification::Growing;
      v.certified = true;
      v.note = "closed form: the ratio exponent (p-1) log q is unbounded";
    } else {
      v.holds = true;
      v.cls = Classification::Exact;
      v.certified = true;
      v.set_constant("A", 1.0);
      v.note = "closed form: the ratio exponent ((2-d)p - 1) log q stays negative";
    }
  } else if (quotients_all_equal(m)) {
    v.holds = true;
    v.cls = Classification::Exact;
    v.certified = true;
    v.set_constant("A", 1.0);
    v.note = "constant quotients make the ratio at most one";
  } else {
    v.holds = lad.cls == Classification::Plateau;
    v.cls = lad.cls;
    v.certified = false;
    if (v.holds) v.set_constant("A", exp_witness(lad.final_sup));
    v.note = v.holds ? "window suprema stabilise"
                     : "window suprema keep increasing at this truncation";
  }
  return v;
}

GrowthIndexResult growth_index(const LogSequence& m, const RunConfig& cfg) {
  GrowthIndexResult r;
  r.d_max = cfg.d_max;
  const std::size_t lim = std::min(cfg.d_max, m.truncation());
  if (lim < cfg.d_max) {
    r.note = "search capped at the truncation " + std::to_string(lim);
  }
  std::vector<std::future<ConditionVerdict>> futs;
  futs.reserve(lim);
  for (std::size_t d = 1; d <= lim; ++d) {
    futs.push_back(std::async(std::launch::async,
                              [&m, &cfg, d] { return genmg(m, d, cfg); }));
  }
  for (auto& f : futs) r.per_d.push_back(f.get());
  for (std::size_t d = 1; d <= r.per_d.size(); ++d) {
    if (r.per_d[d - 1].holds) {
      r.g = d;
      r.finite = true;
      break;
    }
  }
  return r;
}

ConditionVerdict mixed_quotient_root(const LogSequence& l, const LogSequence& m,
                                     std::size_t a, const RunConfig& cfg) {
  if (a == 0) throw ParamError("scale step a must be a positive integer");
  if (a > m.truncation()) {
    throw TruncationError("scale step " + std::to_string(a) +
                          " exceeds the truncation " +
                          std::to_string(m.truncation()));
  }
  ConditionVerdict v;
  v.id = "mixed-root";
  v.set_constant("a", static_cast<double>(a));
  const std::size_t Pmax = std::min(l.truncation(), m.truncation() / a);
  if (Pmax == 0) throw ShapeError("no common index range for the mixed check");
  std::vector<double> profile(Pmax);
  for (std::size_t p = 1; p <= Pmax; ++p) {
    profile[p - 1] =
        l.quotient_at(p) - m.log_at(a * p) / static_cast<double>(a * p);
  }
  const LadderResult lad =
      classify_profile(profile, cfg.ladder_eps_rel, cfg.ladder_eps_final);
  attach_ladder(v, lad);
  v.holds = lad.cls == Classification::Plateau;
  v.cls = lad.cls;
  v.certified = false;
  if (v.holds) v.set_constant("A", exp_witness(lad.final_sup));
  v.note = v.holds ? "window suprema stabilise"
                   : "window suprema keep increasing at this truncation";
  return v;
}

ConditionVerdict weak_separativity(const LogSequence& l, const LogSequence& m,
                                   const RunConfig& cfg) {
  ConditionVerdict v;
  v.id = "weaksep";
  const std::size_t P = std::min(l.truncation(), m.truncation());
  if (P < 2) throw ShapeError("weak separativity needs truncation at least 2");
  std::vector<double> profile(P - 1);
  for (std::size_t p = 1; p < P; ++p) {
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t q = 0; q + p <= P; ++q) {
      best = std::max(best, l.log_at(p + q) - l.log_at(p) - m.log_at(q));
    }
    profile[p - 1] = best / static_cast<double>(p);
  }
  const LadderResult lad =
      classify_profile(profile, cfg.ladder_eps_rel, cfg.ladder_eps_final);
  attach_ladder(v, lad);

  const bool both_qg = l.provenance().kind == FamilyKind::QGevrey &&
                       m.provenance().kind == FamilyKind::QGevrey;
  if (both_qg) {
    // With alpha = log q_L and beta = log q_M the inner term is
    // 2 alpha p q + (alpha - beta) q^2. For alpha >= beta the maximum over q
    // grows without bound with the truncation already at p = 1; for
    // alpha < beta the inner maximum is alpha^2 p^2/(beta - alpha), so the
    // per-p profile grows linearly. No finite constant works in either case.
    v.holds = false;
    v.cls = Classification::Growing;
    v.certified = true;
    v.note = "closed form: the inner maximum grows without bound for every "
             "pair of q-geometric families";
    return v;
  }
  v.holds = lad.cls == Classification::Plateau;
  v.cls = lad.cls;
  v.certified = false;
  if (v.holds) v.set_constant("A", exp_witness(lad.final_sup));
  v.note = v.holds ? "window suprema stabilise (witness revalidates over the "
                     "full truncation)"
                   : "window suprema keep increasing at this truncation";
  return v;
}

ConditionVerdict omega6_general(const LogPL& omega, double factor,
                                const RunConfig& cfg) {
  if (!(factor > 1.0)) throw ParamError("absorption factor must exceed 1");
  ConditionVerdict v;
  v.id = "omega6";
  v.set_constant("a", factor);
  const double bk0 = omega.breakpoints.front();
  const double span = omega.u_max - bk0;
  bool found = false;
  for (int k = 0; k <= cfg.ladder_max_exp; ++k) {
    const double H = std::ldexp(1.0, k);
    const double logH = std::log(H);
    const double hi = omega.u_max - logH;
    // Stop once the usable range shrinks too far: an acceptance supported by a
    // sliver of the domain would be spurious.
    if (hi - bk0 < 0.25 * span) break;
    const std::vector<double> cands = pl_candidates(omega, omega, logH, bk0, hi);
    double sup = -std::numeric_limits<double>::infinity();
    for (double u : cands) {
      sup = std::max(sup,
                     factor * omega.eval_log(u) - omega.eval_log(u + logH));
    }
    v.ladder.push_back({static_cast<std::size_t>(H), sup});
    if (sup <= H + 1e-9 * std::max(1.0, H)) {
      found = true;
      v.set_constant("H", H);
      v.log_sup = sup;
      break;
    }
    v.log_sup = sup;
  }
  v.holds = found;
  v.cls = found ? Classification::Plateau : Classification::Growing;
  v.certified = false;
  v.note = found ? "supremum computed exactly on the kink candidates"
                 : "no constant on the doubling ladder absorbs the factor";
  return v;
}

ConditionVerdict strong_nq_check(const LogPL& omega, const RunConfig& cfg) {
  ConditionVerdict v;
  v.id = "strong-nq";
  // Enough probes that the first classifier window straddles the small-y
  // transient of the ratio instead of sampling a single point inside it.
  const std::size_t n_y = 64;
  const double hi = omega.u_max / 2.0;
  if (!(hi > 0.0)) throw DomainError("validity range too small for the tail integral");
  const std::vector<double> logys = make_u_grid(0.0, hi, n_y);
  std::vector<double> profile;
  profile.reserve(n_y);
  double worst_remainder_ratio = 0.0;
  for (double logy : logys) {
    const auto [integral, remainder] = omega_tail_integral(omega, logy);
    const double denom = omega.eval_log(logy) + 1.0;
    worst_remainder_ratio = std::max(worst_remainder_ratio, remainder / denom);
    profile.push_back(integral / denom);
  }
  const LadderResult lad =
      classify_profile(profile, cfg.ladder_eps_rel, cfg.ladder_eps_final);
  attach_ladder(v, lad);
  v.set_constant("max_remainder_ratio", worst_remainder_ratio);
  if (worst_remainder_ratio > 0.1) {
    v.holds = false;
    v.cls = Classification::Growing;
    v.certified = false;
    v.note = "truncation-limited: the cut-off remainder bound exceeds 10% of "
             "the target scale, so the truncated integral cannot witness the "
             "bound";
    return v;
  }
  v.holds = lad.cls == Classification::Plateau;
  v.cls = lad.cls;
  v.certified = false;
  if (v.holds) v.set_constant("C", std::max(1.0, lad.final_sup));
  v.note = v.holds ? "integral-to-weight ratio stabilises across probe scales"
                   : "integral-to-weight ratio keeps increasing";
  return v;
}

OmegaConditions omega_conditions(const LogPL& omega, const RunConfig& cfg) {
  OmegaConditions out;
  const double bk0 = omega.breakpoints.front();
  const double slack =
      8.0 * std::numeric_limits<double>::epsilon() *
      std::max(1.0, std::fabs(omega.u_max));

  // Vanishing on (0, 1] and monotone: structural, hence exact either way.
  {
    ConditionVerdict v;
    v.id = "omega0";
    const bool vanishes = bk0 >= -slack;
    bool monotone = true;
    for (double s : omega.slopes) {
      if (s < 0.0) monotone = false;
    }
    v.holds = vanishes && monotone;
    v.certified = true;
    v.cls = v.holds ? Classification::Exact : Classification::Growing;
    v.note = v.holds ? "vanishes up to the first kink at a nonnegative "
                       "log-argument; slopes nonnegative"
                     : (vanishes ? "a slope is negative"
                                 : "positive before the argument reaches 1");
    out.om0 = v;
  }

  // Doubling bound.
  {
    ConditionVerdict v;
    v.id = "omega1";
    const double log2 = std::log(2.0);
    const double hi = omega.u_max - log2;
    if (hi <= bk0) {
      v.holds = false;
      v.cls = Classification::Growing;
      v.note = "validity range too small to probe the doubling bound";
    } else {
      const std::vector<double> grid = make_u_grid(bk0, hi, cfg.grid_points);
      std::vector<double> profile;
      profile.reserve(grid.size());
      for (double u : grid) {
        profile.push_back(omega.eval_log(u + log2) /
                          (omega.eval_log(u) + 1.0));
      }
      // The grid drives the window ladder; the witness itself comes from the
      // exact kink candidates (the ratio is monotone between kinks).
      double sup = 0.0;
      for (double u : pl_candidates(omega, omega, log2, bk0, hi)) {
        sup = std::max(sup,
                       omega.eval_log(u + log2) / (omega.eval_log(u) + 1.0));
      }
      const LadderResult lad =
          classify_profile(profile, cfg.ladder_eps_rel, cfg.ladder_eps_final);
      attach_ladder(v, lad);
      v.log_sup = sup;
      v.holds = lad.cls == Classification::Plateau;
      v.cls = lad.cls;
      if (v.holds) v.set_constant("L", std::max(1.0, sup));
      v.note = v.holds ? "doubling ratio stabilises; witness from the exact "
                         "candidate supremum"
                       : "doubling ratio keeps increasing";
    }
    out.om1 = v;
  }

  // log t = o(omega(t)).
  {
    ConditionVerdict v;
    v.id = "omega3";
    const std::vector<double> grid =
        make_u_grid(bk0, omega.u_max, cfg.grid_points);
    std::vector<double> profile;
    profile.reserve(grid.size());
    for (double u : grid) {
      const double w = omega.eval_log(u);
      if (w <= 0.0) {
        ++v.domain_errors;  // ratio undefined where the weight still vanishes
        continue;
      }
      profile.push_back(u / w);
    }
    const DecayResult dec = classify_decay(profile);
    v.ladder = dec.band_max;
    v.log_sup = dec.final_band;
    v.holds = dec.decays;
    v.cls = dec.decays ? Classification::Plateau : Classification::Growing;
    v.note = dec.decays ? "band maxima of log t / weight fall away"
                        : "band maxima do not decay at this truncation";
    out.om3 = v;
  }

  // Convexity in u: structural.
  {
    ConditionVerdict v;
    v.id = "omega4";
    bool convex = true;
    for (std::size_t i = 0; i + 1 < omega.slopes.size(); ++i) {
      if (omega.slopes[i + 1] < omega.slopes[i]) convex = false;
    }
    v.holds = convex;
    v.certified = true;
    v.cls = convex ? Classification::Exact : Classification::Growing;
    v.note = convex ? "slopes nondecreasing in u" : "a slope decreases";
    out.om4 = v;
  }

  out.om6 = omega6_general(omega, 2.0, cfg);
  for (double a : {1.5, 4.0}) {
    ConditionVerdict fv = omega6_general(omega, a, cfg);
    if (fv.holds != out.om6.holds) out.factor_consistent = false;
    out.factor_checks.emplace_back(a, std::move(fv));
  }

  out.strong_nq = strong_nq_check(omega, cfg);
  return out;
}

ConditionVerdict matrix_quotient_root(const LogPL& omega, const RunConfig& cfg) {
  const WeightMatrixView mat = matrix_of(omega);
  const LogSequence w1 = mat.row(1.0);
  const GrowthIndexResult gi = growth_index(w1, cfg);
  ConditionVerdict v;
  v.id = "matrix-root";
  v.holds = gi.finite;
  if (gi.finite) {
    const ConditionVerdict& vd = gi.per_d[gi.g - 1];
    v.cls = vd.cls;
    v.certified = vd.certified;
    v.ladder = vd.ladder;
    v.log_sup = vd.log_sup;
    v.set_constant("d", static_cast<double>(gi.g));
    v.set_constant("A", vd.constant_or("A", 1.0));
    v.note = "finite index for the first matrix row";
  } else {
    v.cls = Classification::Growing;
    v.certified = false;
    v.set_constant("d_max", static_cast<double>(gi.d_max));
    v.note = "exceeds d_max = " + std::to_string(gi.d_max);
  }
  return v;
}

}  // namespace weightcalc
