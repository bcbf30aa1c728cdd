#include <cmath>
#include <cstddef>
#include <cstdio>
#include <cstring>
#include <memory>
#include <string>

#include "doctest.h"
#include "weightcalc.h"

namespace {

constexpr double kLog24 = 3.1780538303479458;

struct SeqDeleter {
  void operator()(wc_sequence* s) const { wc_sequence_free(s); }
};
struct FnDeleter {
  void operator()(wc_weightfn* f) const { wc_weightfn_free(f); }
};
struct ConjDeleter {
  void operator()(wc_conjugate* c) const { wc_conjugate_free(c); }
};
struct MatDeleter {
  void operator()(wc_matrix* m) const { wc_matrix_free(m); }
};
using SeqPtr = std::unique_ptr<wc_sequence, SeqDeleter>;
using FnPtr = std::unique_ptr<wc_weightfn, FnDeleter>;
using ConjPtr = std::unique_ptr<wc_conjugate, ConjDeleter>;
using MatPtr = std::unique_ptr<wc_matrix, MatDeleter>;

SeqPtr parse(const char* spec, std::size_t P) {
  wc_sequence* raw = nullptr;
  REQUIRE(wc_sequence_parse(spec, P, &raw) == WC_OK);
  return SeqPtr(raw);
}

std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  wc_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("version and default configuration") {
  const char* v = wc_version();
  REQUIRE(v != nullptr);
  CHECK(std::strlen(v) > 0);
  wc_config cfg;
  wc_config_default(&cfg);
  CHECK(cfg.truncation == 4096);
  CHECK(cfg.grid_points == 1000);
  CHECK(cfg.d_max == 16);
  CHECK(cfg.ladder_max_exp == 12);
  CHECK(cfg.ladder_eps_rel == 0.05);
  CHECK(cfg.ladder_eps_final == 0.01);
  CHECK(cfg.seed == 1);
}

TEST_CASE("inline specs build the expected sequences") {
  SeqPtr fact = parse("gevrey:1", 64);
  std::size_t P = 0;
  CHECK(wc_sequence_truncation(fact.get(), &P) == WC_OK);
  CHECK(P == 64);
  double v = 0.0;
  CHECK(wc_sequence_log_at(fact.get(), 4, &v) == WC_OK);
  CHECK(v == doctest::Approx(kLog24).epsilon(1e-15));
  CHECK(wc_sequence_quotient_at(fact.get(), 0, &v) == WC_OK);
  CHECK(v == 0.0);

  SeqPtr q2 = parse("{\"kind\": \"qgevrey\", \"param\": 2, \"truncation\": 8}", 64);
  CHECK(wc_sequence_truncation(q2.get(), &P) == WC_OK);
  CHECK(P == 8);
  CHECK(wc_sequence_log_at(q2.get(), 3, &v) == WC_OK);
  CHECK(v == doctest::Approx(9.0 * std::log(2.0)));
}

TEST_CASE("summary and csv artifacts carry the signature values") {
  SeqPtr fact = parse("gevrey:1", 16);
  char* raw = nullptr;
  REQUIRE(wc_sequence_summary_json(fact.get(), &raw) == WC_OK);
  const std::string js = take(raw);
  CHECK(js.find("\"family\": \"gevrey\"") != std::string::npos);
  CHECK(js.find("\"normalized\": true") != std::string::npos);
  CHECK(js.find("\"log_convex\": true") != std::string::npos);

  raw = nullptr;
  REQUIRE(wc_sequence_csv(fact.get(), &raw) == WC_OK);
  const std::string csv = take(raw);
  CHECK(csv.rfind("p,logM,logmu\n", 0) == 0);
  // The rows carry the stored values verbatim at full precision.
  double log_m4 = 0.0;
  REQUIRE(wc_sequence_log_at(fact.get(), 4, &log_m4) == WC_OK);
  CHECK(log_m4 == doctest::Approx(std::log(24.0)));
  char cell[64];
  std::snprintf(cell, sizeof cell, "%.17g", log_m4);
  CHECK(csv.find(cell) != std::string::npos);
}

TEST_CASE("status codes map the failure taxonomy") {
  double v = 0.0;
  wc_sequence* raw = nullptr;

  CHECK(wc_sequence_log_at(nullptr, 0, &v) == WC_ERROR_HANDLE);
  CHECK(std::strlen(wc_last_error()) > 0);

  CHECK(wc_sequence_parse("nonsense", 16, &raw) == WC_ERROR_PARSE);
  CHECK(raw == nullptr);
  CHECK(wc_sequence_parse("bogus:3", 16, &raw) == WC_ERROR_PARSE);
  CHECK(wc_sequence_gevrey(-1.0, 16, &raw) == WC_ERROR_PARAM);
  CHECK(wc_sequence_qgevrey(0.5, 16, &raw) == WC_ERROR_PARAM);

  SeqPtr a = parse("gevrey:1", 16);
  CHECK(wc_sequence_log_at(a.get(), 17, &v) == WC_ERROR_TRUNCATION);
  CHECK(wc_sequence_log_at(a.get(), 16, &v) == WC_OK);
  CHECK(wc_sequence_summary_json(a.get(), nullptr) == WC_ERROR_PARAM);

  SeqPtr b = parse("gevrey:1", 8);
  CHECK(wc_sequence_product(a.get(), b.get(), &raw) == WC_ERROR_SHAPE);

  char* text = nullptr;
  CHECK(wc_relate_json(a.get(), b.get(), "sideways", &text) == WC_ERROR_PARAM);
  CHECK(wc_genmg_json(a.get(), 0, nullptr, &text) == WC_ERROR_PARAM);
  CHECK(wc_check_json(a.get(), "frobnicate", nullptr, &text) == WC_ERROR_PARAM);

  FnPtr f = [&] {
    wc_weightfn* fraw = nullptr;
    REQUIRE(wc_weightfn_of(a.get(), &fraw) == WC_OK);
    return FnPtr(fraw);
  }();
  double umax = 0.0;
  REQUIRE(wc_weightfn_u_max(f.get(), &umax) == WC_OK);
  CHECK(wc_weightfn_eval_log(f.get(), umax + 1.0, &v) == WC_ERROR_DOMAIN);
  CHECK(wc_weightfn_eval(f.get(), -2.0, &v) == WC_ERROR_DOMAIN);
}

TEST_CASE("weight function, conjugate and rows through the shared library") {
  SeqPtr fact = parse("gevrey:1", 32);
  wc_weightfn* fraw = nullptr;
  REQUIRE(wc_weightfn_of(fact.get(), &fraw) == WC_OK);
  FnPtr f(fraw);

  double v = 0.0;
  CHECK(wc_weightfn_eval(f.get(), 3.0, &v) == WC_OK);
  CHECK(v == doctest::Approx(1.5040773967762742).epsilon(1e-13));
  std::size_t segs = 0;
  CHECK(wc_weightfn_segments(f.get(), &segs) == WC_OK);
  CHECK(segs == 32);
  char* raw = nullptr;
  REQUIRE(wc_weightfn_csv(f.get(), &raw) == WC_OK);
  CHECK(take(raw).rfind("u,value,slope\n", 0) == 0);

  wc_conjugate* craw = nullptr;
  REQUIRE(wc_conjugate_of(f.get(), &craw) == WC_OK);
  ConjPtr c(craw);
  CHECK(wc_conjugate_eval(c.get(), 4.0, &v) == WC_OK);
  CHECK(v == doctest::Approx(kLog24).epsilon(1e-12));
  CHECK(wc_conjugate_eval(c.get(), -0.5, &v) == WC_ERROR_DOMAIN);
  raw = nullptr;
  REQUIRE(wc_conjugate_csv(c.get(), &raw) == WC_OK);
  CHECK(take(raw).rfind("x,value\n", 0) == 0);

  wc_matrix* mraw = nullptr;
  REQUIRE(wc_matrix_of(f.get(), &mraw) == WC_OK);
  MatPtr mat(mraw);
  std::size_t rp = 0;
  CHECK(wc_matrix_truncation_for(mat.get(), 2.0, &rp) == WC_OK);
  CHECK(rp == 16);
  CHECK(wc_matrix_truncation_for(mat.get(), 0.0, &rp) == WC_ERROR_PARAM);
  wc_sequence* rraw = nullptr;
  REQUIRE(wc_matrix_row(mat.get(), 1.0, &rraw) == WC_OK);
  SeqPtr row(rraw);
  CHECK(wc_sequence_log_at(row.get(), 4, &v) == WC_OK);
  CHECK(v == doctest::Approx(kLog24).epsilon(1e-9));
}

TEST_CASE("condition checks serialize their verdicts") {
  SeqPtr q2 = parse("qgevrey:2", 128);
  char* raw = nullptr;
  REQUIRE(wc_check_json(q2.get(), "mg", nullptr, &raw) == WC_OK);
  const std::string mg = take(raw);
  CHECK(mg.find("\"holds\": false") != std::string::npos);
  CHECK(mg.find("\"classification\": \"growing\"") != std::string::npos);

  raw = nullptr;
  REQUIRE(wc_growth_index_json(q2.get(), nullptr, &raw) == WC_OK);
  const std::string gi = take(raw);
  CHECK(gi.find("\"g\": 2") != std::string::npos);

  SeqPtr fact = parse("gevrey:1", 128);
  raw = nullptr;
  REQUIRE(wc_relate_json(fact.get(), fact.get(), "equivalent", &raw) == WC_OK);
  CHECK(take(raw).find("\"holds\": true") != std::string::npos);

  // Unit-step self-comparison flattens only over the longer range.
  SeqPtr fact512 = parse("gevrey:1", 512);
  raw = nullptr;
  REQUIRE(wc_mixed_root_json(fact512.get(), fact512.get(), 1, nullptr, &raw) ==
          WC_OK);
  CHECK(take(raw).find("\"holds\": true") != std::string::npos);

  raw = nullptr;
  REQUIRE(wc_weak_separativity_json(fact.get(), fact.get(), nullptr, &raw) ==
          WC_OK);
  CHECK(take(raw).find("\"holds\": true") != std::string::npos);

  wc_weightfn* fraw = nullptr;
  REQUIRE(wc_weightfn_of(fact512.get(), &fraw) == WC_OK);
  FnPtr f(fraw);
  raw = nullptr;
  REQUIRE(wc_omega_conditions_json(f.get(), nullptr, &raw) == WC_OK);
  const std::string oc = take(raw);
  CHECK(oc.find("\"om0\"") != std::string::npos);
  CHECK(oc.find("\"om6\"") != std::string::npos);
  raw = nullptr;
  REQUIRE(wc_matrix_root_json(f.get(), nullptr, &raw) == WC_OK);
  CHECK(take(raw).find("\"holds\": true") != std::string::npos);
}

TEST_CASE("verification entry points report severity") {
  char* raw = nullptr;
  REQUIRE(wc_verify_ids(&raw) == WC_OK);
  const std::string ids = take(raw);
  CHECK(ids.find("tilde-omega-comparison") != std::string::npos);
  CHECK(ids.find("product-convolution") != std::string::npos);

  wc_config cfg;
  wc_config_default(&cfg);
  cfg.truncation = 128;
  SeqPtr fact = parse("gevrey:1", 128);
  const wc_sequence* inputs[1] = {fact.get()};
  int severity = -1;
  raw = nullptr;
  REQUIRE(wc_verify_json("tilde-omega-comparison", inputs, 1, &cfg, &raw,
                         &severity) == WC_OK);
  const std::string rep = take(raw);
  CHECK(severity == 0);
  CHECK(rep.find("\"overall\": \"consistent\"") != std::string::npos);

  CHECK(wc_verify_json("no-such-statement", inputs, 1, &cfg, &raw,
                       &severity) == WC_ERROR_PARAM);
  CHECK(wc_verify_json("tilde-omega-comparison", nullptr, 0, &cfg, &raw,
                       &severity) == WC_ERROR_PARAM);
}

TEST_CASE("random sequences are deterministic through the shared library") {
  wc_sequence* a = nullptr;
  wc_sequence* b = nullptr;
  wc_sequence* c = nullptr;
  REQUIRE(wc_sequence_random(42, 64, 0, &a) == WC_OK);
  REQUIRE(wc_sequence_random(42, 64, 0, &b) == WC_OK);
  REQUIRE(wc_sequence_random(42, 64, 1, &c) == WC_OK);
  SeqPtr pa(a), pb(b), pc(c);
  double va = 0.0;
  double vb = 0.0;
  double vc = 0.0;
  CHECK(wc_sequence_log_at(pa.get(), 64, &va) == WC_OK);
  CHECK(wc_sequence_log_at(pb.get(), 64, &vb) == WC_OK);
  CHECK(wc_sequence_log_at(pc.get(), 64, &vc) == WC_OK);
  CHECK(va == vb);
  CHECK(va != vc);
}
