#include "weightcalc.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <utility>
#include <vector>

#include "conditions.hpp"
#include "errors.hpp"
#include "jsonio.hpp"
#include "matrix.hpp"
#include "piecewise.hpp"
#include "random_lc.hpp"
#include "sequence.hpp"
#include "theorems.hpp"
#include "weightfun.hpp"

struct wc_sequence {
  weightcalc::LogSequence v;
};

struct wc_weightfn {
  weightcalc::LogPL v;
};

struct wc_conjugate {
  weightcalc::ConjugatePL v;
};

struct wc_matrix {
  explicit wc_matrix(weightcalc::LogPL omega) : v(std::move(omega)) {}
  weightcalc::WeightMatrixView v;
};

namespace {

thread_local std::string t_last_error;

wc_status set_error(wc_status code, const std::string& msg) {
  t_last_error = msg;
  return code;
}

wc_status null_handle() { return set_error(WC_ERROR_HANDLE, "null handle"); }

wc_status null_out() {
  return set_error(WC_ERROR_PARAM, "null output pointer");
}

// Boundary wrapper: run the body, translate exceptions to status codes and
// capture their messages for wc_last_error.
template <typename Fn>
wc_status guarded(Fn&& fn) {
  using namespace weightcalc;
  try {
    return fn();
  } catch (const ParamError& e) {
    return set_error(WC_ERROR_PARAM, e.what());
  } catch (const ShapeError& e) {
    return set_error(WC_ERROR_SHAPE, e.what());
  } catch (const DomainError& e) {
    return set_error(WC_ERROR_DOMAIN, e.what());
  } catch (const TruncationError& e) {
    return set_error(WC_ERROR_TRUNCATION, e.what());
  } catch (const ParseError& e) {
    return set_error(WC_ERROR_PARSE, e.what());
  } catch (const std::exception& e) {
    return set_error(WC_ERROR_INTERNAL, e.what());
  } catch (...) {
    return set_error(WC_ERROR_INTERNAL, "unknown error");
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

weightcalc::RunConfig to_config(const wc_config* cfg) {
  weightcalc::RunConfig r;
  if (cfg) {
    r.truncation = cfg->truncation;
    r.grid_points = cfg->grid_points;
    r.d_max = cfg->d_max;
    r.ladder_max_exp = cfg->ladder_max_exp;
    r.ladder_eps_rel = cfg->ladder_eps_rel;
    r.ladder_eps_final = cfg->ladder_eps_final;
    r.seed = cfg->seed;
  }
  return r;
}

int severity_of(const std::string& overall) {
  if (overall == "violation-found") return 2;
  if (overall == "indeterminate") return 1;
  return 0;
}

}  // namespace

extern "C" {

void wc_config_default(wc_config* out) {
  if (!out) return;
  weightcalc::RunConfig r;
  out->truncation = r.truncation;
  out->grid_points = r.grid_points;
  out->d_max = r.d_max;
  out->ladder_max_exp = r.ladder_max_exp;
  out->ladder_eps_rel = r.ladder_eps_rel;
  out->ladder_eps_final = r.ladder_eps_final;
  out->seed = r.seed;
}

const char* wc_version(void) { return "0.1.0"; }

const char* wc_last_error(void) { return t_last_error.c_str(); }

void wc_string_free(char* s) { std::free(s); }

/* --- sequences ---------------------------------------------------------- */

wc_status wc_sequence_parse(const char* spec, size_t default_truncation,
                            wc_sequence** out) {
  if (!out) return null_out();
  if (!spec) return set_error(WC_ERROR_PARAM, "null sequence spec");
  return guarded([&] {
    *out = new wc_sequence{
        weightcalc::parse_sequence_spec(spec, default_truncation)};
    return WC_OK;
  });
}

wc_status wc_sequence_gevrey(double s, size_t truncation, wc_sequence** out) {
  if (!out) return null_out();
  return guarded([&] {
    *out = new wc_sequence{weightcalc::LogSequence::gevrey(s, truncation)};
    return WC_OK;
  });
}

wc_status wc_sequence_qgevrey(double q, size_t truncation, wc_sequence** out) {
  if (!out) return null_out();
  return guarded([&] {
    *out = new wc_sequence{weightcalc::LogSequence::q_gevrey(q, truncation)};
    return WC_OK;
  });
}

wc_status wc_sequence_from_quotients(const double* quotients, size_t n,
                                     wc_sequence** out) {
  if (!out) return null_out();
  if (!quotients && n > 0)
    return set_error(WC_ERROR_PARAM, "null quotient array");
  return guarded([&] {
    std::vector<double> q(quotients, quotients + n);
    *out = new wc_sequence{weightcalc::LogSequence::from_quotients(std::move(q))};
    return WC_OK;
  });
}

wc_status wc_sequence_from_logs(const double* logs, size_t n,
                                wc_sequence** out) {
  if (!out) return null_out();
  if (!logs && n > 0) return set_error(WC_ERROR_PARAM, "null log array");
  return guarded([&] {
    std::vector<double> l(logs, logs + n);
    *out = new wc_sequence{weightcalc::LogSequence::from_logs(l)};
    return WC_OK;
  });
}

wc_status wc_sequence_random(uint64_t seed, size_t truncation, int staircase,
                             wc_sequence** out) {
  if (!out) return null_out();
  return guarded([&] {
    *out = new wc_sequence{staircase
                               ? weightcalc::random_lc_staircase(seed, truncation)
                               : weightcalc::random_lc(seed, truncation)};
    return WC_OK;
  });
}

void wc_sequence_free(wc_sequence* s) { delete s; }

wc_status wc_sequence_truncation(const wc_sequence* s, size_t* out) {
  if (!s) return null_handle();
  if (!out) return null_out();
  *out = s->v.truncation();
  return WC_OK;
}

wc_status wc_sequence_log_at(const wc_sequence* s, size_t p, double* out) {
  if (!s) return null_handle();
  if (!out) return null_out();
  return guarded([&] {
    *out = s->v.log_at(p);
    return WC_OK;
  });
}

wc_status wc_sequence_quotient_at(const wc_sequence* s, size_t p, double* out) {
  if (!s) return null_handle();
  if (!out) return null_out();
  return guarded([&] {
    *out = s->v.quotient_at(p);
    return WC_OK;
  });
}

wc_status wc_sequence_summary_json(const wc_sequence* s, char** out) {
  if (!s) return null_handle();
  if (!out) return null_out();
  return guarded([&] {
    *out = dup_string(weightcalc::sequence_summary_json(s->v));
    return WC_OK;
  });
}

wc_status wc_sequence_csv(const wc_sequence* s, char** out) {
  if (!s) return null_handle();
  if (!out) return null_out();
  return guarded([&] {
    *out = dup_string(weightcalc::sequence_csv(s->v));
    return WC_OK;
  });
}

wc_status wc_sequence_product(const wc_sequence* a, const wc_sequence* b,
                              wc_sequence** out) {
  if (!a || !b) return null_handle();
  if (!out) return null_out();
  return guarded([&] {
    *out = new wc_sequence{weightcalc::product(a->v, b->v)};
    return WC_OK;
  });
}

wc_status wc_sequence_power(const wc_sequence* s, double ell,
                            wc_sequence** out) {
  if (!s) return null_handle();
  if (!out) return null_out();
  return guarded([&] {
    *out = new wc_sequence{weightcalc::power(s->v, ell)};
    return WC_OK;
  });
}

wc_status wc_sequence_tilde(const wc_sequence* s, unsigned a,
                            wc_sequence** out) {
  if (!s) return null_handle();
  if (!out) return null_out();
  return guarded([&] {
    *out = new wc_sequence{weightcalc::tilde(s->v, a)};
    return WC_OK;
  });
}

wc_status wc_sequence_geometric_scale(const wc_sequence* s, double logc,
                                      wc_sequence** out) {
  if (!s) return null_handle();
  if (!out) return null_out();
  return guarded([&] {
    *out = new wc_sequence{weightcalc::geometric_scale(s->v, logc)};
    return WC_OK;
  });
}

wc_status wc_sequence_convolve(const wc_sequence* a, const wc_sequence* b,
                               wc_sequence** out) {
  if (!a || !b) return null_handle();
  if (!out) return null_out();
  return guarded([&] {
    *out = new wc_sequence{weightcalc::convolve(a->v, b->v)};
    return WC_OK;
  });
}

wc_status wc_sequence_lc_regularize(const wc_sequence* s, wc_sequence** out) {
  if (!s) return null_handle();
  if (!out) return null_out();
  return guarded([&] {
    *out = new wc_sequence{weightcalc::lc_regularize(s->v)};
    return WC_OK;
  });
}

/* --- weight functions ---------------------------------------------------- */

wc_status wc_weightfn_of(const wc_sequence* s, wc_weightfn** out) {
  if (!s) return null_handle();
  if (!out) return null_out();
  return guarded([&] {
    *out = new wc_weightfn{weightcalc::omega_of(s->v)};
    return WC_OK;
  });
}

void wc_weightfn_free(wc_weightfn* f) { delete f; }

wc_status wc_weightfn_eval_log(const wc_weightfn* f, double u, double* out) {
  if (!f) return null_handle();
  if (!out) return null_out();
  return guarded([&] {
    *out = f->v.eval_log(u);
    return WC_OK;
  });
}

wc_status wc_weightfn_eval(const wc_weightfn* f, double t, double* out) {
  if (!f) return null_handle();
  if (!out) return null_out();
  return guarded([&] {
    *out = f->v.eval_t(t);
    return WC_OK;
  });
}

wc_status wc_weightfn_segments(const wc_weightfn* f, size_t* out) {
  if (!f) return null_handle();
  if (!out) return null_out();
  *out = f->v.segment_count();
  return WC_OK;
}

wc_status wc_weightfn_u_max(const wc_weightfn* f, double* out) {
  if (!f) return null_handle();
  if (!out) return null_out();
  *out = f->v.u_max;
  return WC_OK;
}

wc_status wc_weightfn_csv(const wc_weightfn* f, char** out) {
  if (!f) return null_handle();
  if (!out) return null_out();
  return guarded([&] {
    *out = dup_string(weightcalc::weightfn_csv(f->v));
    return WC_OK;
  });
}

/* --- conjugates ---------------------------------------------------------- */

wc_status wc_conjugate_of(const wc_weightfn* f, wc_conjugate** out) {
  if (!f) return null_handle();
  if (!out) return null_out();
  return guarded([&] {
    *out = new wc_conjugate{weightcalc::young_conjugate(f->v)};
    return WC_OK;
  });
}

void wc_conjugate_free(wc_conjugate* c) { delete c; }

wc_status wc_conjugate_eval(const wc_conjugate* c, double x, double* out) {
  if (!c) return null_handle();
  if (!out) return null_out();
  return guarded([&] {
    *out = c->v.eval(x);
    return WC_OK;
  });
}

wc_status wc_conjugate_csv(const wc_conjugate* c, char** out) {
  if (!c) return null_handle();
  if (!out) return null_out();
  return guarded([&] {
    *out = dup_string(weightcalc::conjugate_csv(c->v));
    return WC_OK;
  });
}

/* --- matrices ------------------------------------------------------------ */

wc_status wc_matrix_of(const wc_weightfn* f, wc_matrix** out) {
  if (!f) return null_handle();
  if (!out) return null_out();
  return guarded([&] {
    *out = new wc_matrix(f->v);
    return WC_OK;
  });
}

void wc_matrix_free(wc_matrix* m) { delete m; }

wc_status wc_matrix_truncation_for(const wc_matrix* m, double ell,
                                   size_t* out) {
  if (!m) return null_handle();
  if (!out) return null_out();
  return guarded([&] {
    *out = m->v.truncation_for(ell);
    return WC_OK;
  });
}

wc_status wc_matrix_row(const wc_matrix* m, double ell, wc_sequence** out) {
  if (!m) return null_handle();
  if (!out) return null_out();
  return guarded([&] {
    *out = new wc_sequence{m->v.row(ell)};
    return WC_OK;
  });
}

/* --- condition checks ---------------------------------------------------- */

wc_status wc_check_json(const wc_sequence* s, const char* condition,
                        const wc_config* cfg, char** out) {
  if (!s) return null_handle();
  if (!out) return null_out();
  if (!condition) return set_error(WC_ERROR_PARAM, "null condition name");
  return guarded([&] {
    const std::string cond = condition;
    weightcalc::ConditionVerdict v;
    if (cond == "lc") {
      v = weightcalc::check_lc(s->v);
    } else if (cond == "mg") {
      v = weightcalc::has_mg(s->v, to_config(cfg));
    } else if (cond == "mg-root") {
      v = weightcalc::mg_root_quotient(s->v, to_config(cfg));
    } else {
      return set_error(WC_ERROR_PARAM, "unknown condition '" + cond +
                                           "' (expected lc, mg, or mg-root)");
    }
    *out = dup_string(weightcalc::to_json(v));
    return WC_OK;
  });
}

wc_status wc_genmg_json(const wc_sequence* s, size_t d, const wc_config* cfg,
                        char** out) {
  if (!s) return null_handle();
  if (!out) return null_out();
  return guarded([&] {
    *out = dup_string(
        weightcalc::to_json(weightcalc::genmg(s->v, d, to_config(cfg))));
    return WC_OK;
  });
}

wc_status wc_growth_index_json(const wc_sequence* s, const wc_config* cfg,
                               char** out) {
  if (!s) return null_handle();
  if (!out) return null_out();
  return guarded([&] {
    *out = dup_string(
        weightcalc::to_json(weightcalc::growth_index(s->v, to_config(cfg))));
    return WC_OK;
  });
}

wc_status wc_relate_json(const wc_sequence* a, const wc_sequence* b,
                         const char* kind, char** out) {
  if (!a || !b) return null_handle();
  if (!out) return null_out();
  if (!kind) return set_error(WC_ERROR_PARAM, "null relation kind");
  return guarded([&] {
    const std::string k = kind;
    weightcalc::RelationKind rk;
    if (k == "leq") {
      rk = weightcalc::RelationKind::PointwiseLeq;
    } else if (k == "dominated") {
      rk = weightcalc::RelationKind::Dominated;
    } else if (k == "equivalent") {
      rk = weightcalc::RelationKind::Equivalent;
    } else {
      return set_error(WC_ERROR_PARAM,
                       "unknown relation kind '" + k +
                           "' (expected leq, dominated, or equivalent)");
    }
    *out = dup_string(weightcalc::to_json(weightcalc::relate(a->v, b->v, rk)));
    return WC_OK;
  });
}

wc_status wc_mixed_root_json(const wc_sequence* l, const wc_sequence* m,
                             unsigned a, const wc_config* cfg, char** out) {
  if (!l || !m) return null_handle();
  if (!out) return null_out();
  return guarded([&] {
    *out = dup_string(weightcalc::to_json(
        weightcalc::mixed_quotient_root(l->v, m->v, a, to_config(cfg))));
    return WC_OK;
  });
}

wc_status wc_weak_separativity_json(const wc_sequence* l, const wc_sequence* m,
                                    const wc_config* cfg, char** out) {
  if (!l || !m) return null_handle();
  if (!out) return null_out();
  return guarded([&] {
    *out = dup_string(weightcalc::to_json(
        weightcalc::weak_separativity(l->v, m->v, to_config(cfg))));
    return WC_OK;
  });
}

wc_status wc_omega_conditions_json(const wc_weightfn* f, const wc_config* cfg,
                                   char** out) {
  if (!f) return null_handle();
  if (!out) return null_out();
  return guarded([&] {
    *out = dup_string(weightcalc::to_json(
        weightcalc::omega_conditions(f->v, to_config(cfg))));
    return WC_OK;
  });
}

wc_status wc_matrix_root_json(const wc_weightfn* f, const wc_config* cfg,
                              char** out) {
  if (!f) return null_handle();
  if (!out) return null_out();
  return guarded([&] {
    *out = dup_string(weightcalc::to_json(
        weightcalc::matrix_quotient_root(f->v, to_config(cfg))));
    return WC_OK;
  });
}

/* --- verification reports ------------------------------------------------ */

wc_status wc_verify_ids(char** out) {
  if (!out) return null_out();
  return guarded([&] {
    std::string joined;
    for (const auto& id : weightcalc::verify_ids()) {
      if (!joined.empty()) joined += '\n';
      joined += id;
    }
    *out = dup_string(joined);
    return WC_OK;
  });
}

wc_status wc_verify_json(const char* id, const wc_sequence* const* inputs,
                         size_t n_inputs, const wc_config* cfg, char** out,
                         int* severity) {
  if (!out) return null_out();
  if (!id) return set_error(WC_ERROR_PARAM, "null verify id");
  if (!inputs && n_inputs > 0)
    return set_error(WC_ERROR_PARAM, "null input array");
  return guarded([&] {
    std::vector<weightcalc::LogSequence> seqs;
    seqs.reserve(n_inputs);
    for (size_t i = 0; i < n_inputs; ++i) {
      if (!inputs[i]) return null_handle();
      seqs.push_back(inputs[i]->v);
    }
    weightcalc::TheoremReport rep =
        weightcalc::run_verify(id, seqs, to_config(cfg));
    *out = dup_string(weightcalc::to_json(rep));
    if (severity) *severity = severity_of(rep.overall);
    return WC_OK;
  });
}

wc_status wc_verify_all_json(const wc_sequence* s, const char* family_label,
                             const wc_config* cfg, char** out, int* severity) {
  if (!s) return null_handle();
  if (!out) return null_out();
  return guarded([&] {
    weightcalc::SuiteResult suite = weightcalc::verify_all(
        s->v, family_label ? family_label : "", to_config(cfg));
    *out = dup_string(weightcalc::to_json(suite));
    if (severity) *severity = severity_of(suite.overall);
    return WC_OK;
  });
}

} /* extern "C" */
