#include "sequence.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>

#include "errors.hpp"

namespace weightcalc {

namespace {

std::vector<double> prefix_sums(const std::vector<double>& logmu) {
  std::vector<double> out(logmu.size(), 0.0);
  for (std::size_t p = 1; p < logmu.size(); ++p) out[p] = out[p - 1] + logmu[p];
  return out;
}

bool all_quotients_equal(const LogSequence& m) {
  const auto& q = m.quotients();
  for (std::size_t p = 2; p < q.size(); ++p) {
    if (q[p] != q[1]) return false;
  }
  return q.size() > 1;
}

}  // namespace

LogSequence LogSequence::from_quotients(std::vector<double> quotients,
                                        Provenance prov) {
  if (quotients.empty()) throw ShapeError("sequence needs at least one quotient");
  for (double v : quotients) {
    if (!std::isfinite(v)) throw ParamError("quotient logs must be finite");
  }
  LogSequence s;
  s.logmu_.resize(quotients.size() + 1);
  s.logmu_[0] = 0.0;
  std::copy(quotients.begin(), quotients.end(), s.logmu_.begin() + 1);
  s.logM_ = prefix_sums(s.logmu_);
  s.prov_ = prov;
  return s;
}

LogSequence LogSequence::from_logs(const std::vector<double>& logs) {
  if (logs.size() < 2) throw ShapeError("sequence needs entries for p = 0 and p = 1");
  if (logs[0] != 0.0) throw ShapeError("log M_0 must be 0 (M_0 = 1)");
  std::vector<double> quot(logs.size() - 1);
  for (std::size_t p = 1; p < logs.size(); ++p) quot[p - 1] = logs[p] - logs[p - 1];
  return from_quotients(std::move(quot));
}

LogSequence LogSequence::gevrey(double s, std::size_t P) {
  if (!(s > 0.0)) throw ParamError("gevrey parameter must satisfy s > 0");
  if (P < 1) throw ShapeError("truncation must be at least 1");
  std::vector<double> quot(P);
  for (std::size_t p = 1; p <= P; ++p) {
    quot[p - 1] = s * std::log(static_cast<double>(p));
  }
  return from_quotients(std::move(quot), {FamilyKind::Gevrey, s});
}

LogSequence LogSequence::q_gevrey(double q, std::size_t P) {
  if (!(q > 1.0)) throw ParamError("qgevrey parameter must satisfy q > 1");
  if (P < 1) throw ShapeError("truncation must be at least 1");
  const double logq = std::log(q);
  std::vector<double> quot(P);
  for (std::size_t p = 1; p <= P; ++p) {
    quot[p - 1] = static_cast<double>(2 * p - 1) * logq;
  }
  return from_quotients(std::move(quot), {FamilyKind::QGevrey, logq});
}

double LogSequence::log_at(std::size_t p) const {
  if (p >= logM_.size()) throw TruncationError("index beyond truncation");
  return logM_[p];
}

double LogSequence::quotient_at(std::size_t p) const {
  if (p >= logmu_.size()) throw TruncationError("index beyond truncation");
  return logmu_[p];
}

bool LogSequence::is_normalized() const {
  return logmu_.size() > 1 && logmu_[1] >= 0.0;
}

std::pair<bool, std::size_t> LogSequence::is_log_convex() const {
  for (std::size_t p = 2; p < logmu_.size(); ++p) {
    if (logmu_[p] < logmu_[p - 1]) return {false, p};
  }
  return {true, 0};
}

LogSequence product(const LogSequence& m, const LogSequence& n) {
  const std::size_t P = m.truncation();
  if (P != n.truncation()) {
    throw ShapeError("product requires equal truncations");
  }
  std::vector<double> quot(P);
  for (std::size_t p = 1; p <= P; ++p) {
    quot[p - 1] = m.quotient_at(p) + n.quotient_at(p);
  }
  Provenance prov;
  const auto& a = m.provenance();
  const auto& b = n.provenance();
  if (a.kind == FamilyKind::Gevrey && b.kind == FamilyKind::Gevrey) {
    prov = {FamilyKind::Gevrey, a.param + b.param};
  } else if (a.kind == FamilyKind::QGevrey && b.kind == FamilyKind::QGevrey) {
    prov = {FamilyKind::QGevrey, a.param + b.param};
  }
  return LogSequence::from_quotients(std::move(quot), prov);
}

LogSequence power(const LogSequence& m, double ell) {
  if (!(ell > 0.0)) throw ParamError("power exponent must be positive");
  const std::size_t P = m.truncation();
  std::vector<double> quot(P);
  for (std::size_t p = 1; p <= P; ++p) quot[p - 1] = ell * m.quotient_at(p);
  Provenance prov = m.provenance();
  if (prov.kind != FamilyKind::None) prov.param *= ell;
  return LogSequence::from_quotients(std::move(quot), prov);
}

LogSequence tilde(const LogSequence& m, unsigned a) {
  if (a == 0) throw ParamError("tilde index must be a positive integer");
  const std::size_t P = m.truncation();
  if (a > P) throw TruncationError("tilde index exceeds the truncation");
  const std::size_t Pa = P / a;
  std::vector<double> quot(Pa);
  const double inv = 1.0 / static_cast<double>(a);
  for (std::size_t p = 1; p <= Pa; ++p) {
    quot[p - 1] = (m.log_at(a * p) - m.log_at(a * (p - 1))) * inv;
  }
  Provenance prov;
  if (m.provenance().kind == FamilyKind::QGevrey) {
    // (q^{(ap)^2})^{1/a} = (q^a)^{p^2}
    prov = {FamilyKind::QGevrey, m.provenance().param * static_cast<double>(a)};
  }
  return LogSequence::from_quotients(std::move(quot), prov);
}

LogSequence geometric_scale(const LogSequence& m, double logc) {
  const std::size_t P = m.truncation();
  std::vector<double> quot(P);
  for (std::size_t p = 1; p <= P; ++p) quot[p - 1] = m.quotient_at(p) + logc;
  return LogSequence::from_quotients(std::move(quot));
}

LogSequence convolve(const LogSequence& m, const LogSequence& n) {
  if (!m.is_normalized() || !n.is_normalized()) {
    throw ParamError("convolution requires normalized operands (M_0 = 1 <= M_1)");
  }
  if (!m.is_log_convex().first || !n.is_log_convex().first) {
    return convolve_direct(m, n);
  }
  // Stable sorted merge of the quotient arrays: on ties the first operand's
  // quotient is taken first.
  const auto& qa = m.quotients();
  const auto& qb = n.quotients();
  std::vector<double> merged;
  merged.reserve(qa.size() + qb.size() - 2);
  std::size_t i = 1, j = 1;
  while (i < qa.size() && j < qb.size()) {
    if (qb[j] < qa[i]) {
      merged.push_back(qb[j++]);
    } else {
      merged.push_back(qa[i++]);
    }
  }
  while (i < qa.size()) merged.push_back(qa[i++]);
  while (j < qb.size()) merged.push_back(qb[j++]);
  return LogSequence::from_quotients(std::move(merged));
}

LogSequence convolve_direct(const LogSequence& m, const LogSequence& n) {
  if (!m.is_normalized() || !n.is_normalized()) {
    throw ParamError("convolution requires normalized operands (M_0 = 1 <= M_1)");
  }
  const std::size_t Pm = m.truncation();
  const std::size_t Pn = n.truncation();
  const std::size_t P = Pm + Pn;
  std::vector<double> logs(P + 1, 0.0);
  for (std::size_t p = 1; p <= P; ++p) {
    double best = std::numeric_limits<double>::infinity();
    const std::size_t qlo = p > Pn ? p - Pn : 0;
    const std::size_t qhi = std::min(p, Pm);
    for (std::size_t q = qlo; q <= qhi; ++q) {
      best = std::min(best, m.log_at(q) + n.log_at(p - q));
    }
    logs[p] = best;
  }
  return LogSequence::from_logs(logs);
}

LogSequence lc_regularize(const LogSequence& m) {
  if (m.is_log_convex().first) return m;
  const std::size_t P = m.truncation();
  // Lower convex hull of (p, log M_p), p = 0..P (Andrew monotone chain; the
  // abscissae are already sorted).
  std::vector<std::size_t> hull;
  for (std::size_t p = 0; p <= P; ++p) {
    const double y = m.log_at(p);
    while (hull.size() >= 2) {
      const std::size_t o = hull[hull.size() - 2];
      const std::size_t a = hull[hull.size() - 1];
      const double cross =
          (static_cast<double>(a - o)) * (y - m.log_at(o)) -
          (m.log_at(a) - m.log_at(o)) * (static_cast<double>(p - o));
      if (cross <= 0.0) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(p);
  }
  std::vector<double> quot(P);
  for (std::size_t h = 0; h + 1 < hull.size(); ++h) {
    const std::size_t lo = hull[h];
    const std::size_t hi = hull[h + 1];
    const double slope = (m.log_at(hi) - m.log_at(lo)) / static_cast<double>(hi - lo);
    for (std::size_t p = lo + 1; p <= hi; ++p) quot[p - 1] = slope;
  }
  return LogSequence::from_quotients(std::move(quot));
}

ConditionVerdict relate(const LogSequence& m, const LogSequence& n,
                        RelationKind kind) {
  ConditionVerdict v;
  const std::size_t P = std::min(m.truncation(), n.truncation());
  if (P < 1) throw ShapeError("relate requires a common truncation of at least 1");

  if (kind == RelationKind::PointwiseLeq) {
    v.id = "relate-leq";
    double worst = -std::numeric_limits<double>::infinity();
    std::size_t worst_p = 1;
    bool ok = true;
    for (std::size_t p = 1; p <= P; ++p) {
      const double d = m.log_at(p) - n.log_at(p);
      if (d > worst) {
        worst = d;
        worst_p = p;
      }
      const double slack =
          8.0 * std::numeric_limits<double>::epsilon() *
          std::max({1.0, std::fabs(m.log_at(p)), std::fabs(n.log_at(p))});
      if (d > slack) ok = false;
    }
    v.holds = ok;
    v.cls = Classification::Exact;
    v.certified = true;
    v.log_sup = worst;
    v.witness_index = worst_p;
    v.set_constant("log_sup", worst);
    return v;
  }

  auto one_direction = [&](const LogSequence& top, const LogSequence& bot,
                           const char* id) {
    ConditionVerdict d;
    d.id = id;
    if (top.same_logs(bot)) {
      d.holds = true;
      d.cls = Classification::Exact;
      d.certified = true;
      d.log_sup = 0.0;
      d.set_constant("C", 1.0);
      d.note = "operands share identical stored logs";
      return d;
    }
    std::vector<double> profile(P);
    for (std::size_t p = 1; p <= P; ++p) {
      profile[p - 1] = (top.log_at(p) - bot.log_at(p)) / static_cast<double>(p);
    }
    LadderResult lad = classify_profile(profile);
    d.ladder = lad.points;
    d.cls = lad.cls;
    d.log_sup = lad.final_sup;
    d.witness_index = lad.argmax + 1;
    d.holds = lad.cls != Classification::Growing;
    if (d.holds) {
      d.set_constant("C", std::exp(std::max(0.0, lad.final_sup)));
    }
    return d;
  };

  if (kind == RelationKind::Dominated) {
    return one_direction(m, n, "relate-dominated");
  }

  ConditionVerdict fwd = one_direction(m, n, "relate-dominated");
  ConditionVerdict bwd = one_direction(n, m, "relate-dominated");
  v.id = "relate-equivalent";
  v.holds = fwd.holds && bwd.holds;
  v.certified = fwd.certified && bwd.certified;
  if (fwd.cls == Classification::Growing || bwd.cls == Classification::Growing) {
    v.cls = Classification::Growing;
  } else if (fwd.cls == Classification::Plateau || bwd.cls == Classification::Plateau) {
    v.cls = Classification::Plateau;
  } else {
    v.cls = Classification::Exact;
  }
  v.log_sup = std::max(fwd.log_sup, bwd.log_sup);
  if (fwd.holds) v.set_constant("C_forward", fwd.constant_or("C", 1.0));
  if (bwd.holds) v.set_constant("C_backward", bwd.constant_or("C", 1.0));
  v.ladder = fwd.ladder;
  v.note = fwd.holds && bwd.holds ? "" : "one direction fails";
  return v;
}

ConditionVerdict check_lc(const LogSequence& m) {
  ConditionVerdict v;
  v.id = "lc";
  const bool normalized = m.is_normalized();
  const auto [convex, bad_p] = m.is_log_convex();
  const std::size_t P = m.truncation();

  bool roots_diverge = false;
  bool roots_certified = false;
  const auto& prov = m.provenance();
  if (prov.kind == FamilyKind::Gevrey || prov.kind == FamilyKind::QGevrey) {
    roots_diverge = true;
    roots_certified = true;
    v.note = "root divergence certified by the construction family";
  } else if (all_quotients_equal(m)) {
    // Constant quotients: roots tend to the common quotient, never to infinity.
    roots_diverge = false;
    roots_certified = true;
    v.note = "constant quotients: roots stay bounded";
  } else {
    std::vector<double> roots(P);
    for (std::size_t p = 1; p <= P; ++p) {
      roots[p - 1] = m.log_at(p) / static_cast<double>(p);
    }
    LadderResult lad = classify_profile(roots);
    v.ladder = lad.points;
    v.log_sup = lad.final_sup;
    // Divergence evidence means the roots profile keeps growing across windows.
    roots_diverge = lad.cls == Classification::Growing;
    v.note = roots_diverge ? "roots grow across the window ladder"
                           : "roots flatten: no divergence evidence";
  }

  v.holds = normalized && convex && roots_diverge;
  v.certified = roots_certified;
  v.cls = roots_certified ? Classification::Exact
                          : (roots_diverge ? Classification::Growing
                                           : Classification::Plateau);
  if (!normalized) {
    v.note = "not normalized: M_1 < M_0";
  } else if (!convex) {
    v.note = "log-convexity fails at quotient index " + std::to_string(bad_p);
    v.witness_index = bad_p;
  }
  return v;
}

}  // namespace weightcalc
