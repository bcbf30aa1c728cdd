// Command-line surface over the shared library: sequence ingestion and export,
// weight-function and conjugate plot data, matrix rows, condition checks, the
// growth index, and the verification suite. Artifacts go to stdout, or to the
// directory named by WEIGHTCALC_OUT when that variable is set.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "weightcalc.h"

namespace {

struct Failure {
  int code;
};

void ok(wc_status st) {
  if (st != WC_OK) {
    std::fprintf(stderr, "error: %s\n", wc_last_error());
    throw Failure{1};
  }
}

void usage_error(const std::string& msg) {
  std::fprintf(stderr, "error: %s\n", msg.c_str());
  throw Failure{1};
}

struct SeqDeleter {
  void operator()(wc_sequence* p) const { wc_sequence_free(p); }
};
using SeqPtr = std::unique_ptr<wc_sequence, SeqDeleter>;

struct FnDeleter {
  void operator()(wc_weightfn* p) const { wc_weightfn_free(p); }
};
using FnPtr = std::unique_ptr<wc_weightfn, FnDeleter>;

struct ConjDeleter {
  void operator()(wc_conjugate* p) const { wc_conjugate_free(p); }
};
using ConjPtr = std::unique_ptr<wc_conjugate, ConjDeleter>;

struct MatDeleter {
  void operator()(wc_matrix* p) const { wc_matrix_free(p); }
};
using MatPtr = std::unique_ptr<wc_matrix, MatDeleter>;

std::string take_string(char* s) {
  std::string r = s ? s : "";
  wc_string_free(s);
  return r;
}

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Short decimal form for file names ("2", "0.5").
std::string fmt_ell(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

// A spec argument is either a path to a file holding the spec text or the
// spec text itself (inline "gevrey:1" form or a JSON object).
std::string load_spec_text(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg, std::ios::binary);
    if (!in) usage_error("cannot read spec file '" + arg + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  return arg;
}

SeqPtr make_sequence(const std::string& spec_arg, const wc_config& cfg) {
  const std::string text = load_spec_text(spec_arg);
  wc_sequence* raw = nullptr;
  ok(wc_sequence_parse(text.c_str(), cfg.truncation, &raw));
  return SeqPtr(raw);
}

FnPtr make_weightfn(const wc_sequence* s) {
  wc_weightfn* raw = nullptr;
  ok(wc_weightfn_of(s, &raw));
  return FnPtr(raw);
}

// Collects named artifacts and flushes them at the end of the command: to
// files under WEIGHTCALC_OUT when set, otherwise to stdout (bare content for
// a single artifact, "# file:" headers between several).
class Emitter {
public:
  void add(std::string name, std::string content) {
    items_.emplace_back(std::move(name), std::move(content));
  }

  void flush() {
    const char* dir = std::getenv("WEIGHTCALC_OUT");
    if (dir && *dir) {
      std::filesystem::create_directories(dir);
      for (auto& [name, content] : items_) {
        const std::filesystem::path path = std::filesystem::path(dir) / name;
        std::ofstream out(path, std::ios::binary);
        if (!out) usage_error("cannot write '" + path.string() + "'");
        out << content;
        if (content.empty() || content.back() != '\n') out << '\n';
      }
      return;
    }
    bool first = true;
    for (auto& [name, content] : items_) {
      if (items_.size() > 1) {
        if (!first) std::fputc('\n', stdout);
        std::fprintf(stdout, "# file: %s\n", name.c_str());
      }
      std::fwrite(content.data(), 1, content.size(), stdout);
      if (content.empty() || content.back() != '\n') std::fputc('\n', stdout);
      first = false;
    }
  }

private:
  std::vector<std::pair<std::string, std::string>> items_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Weight-sequence calculus: sequences, weight functions, conjugates, "
      "matrix rows, growth-condition checks, and cross-check reports."};
  app.require_subcommand(1);

  wc_config cfg;
  wc_config_default(&cfg);
  app.add_option("-P,--truncation", cfg.truncation,
                 "Default sequence truncation")
      ->capture_default_str();
  app.add_option("--grid-points", cfg.grid_points,
                 "Probe count for grid-sampled profiles")
      ->capture_default_str();
  app.add_option("--d-max", cfg.d_max, "Growth-index search bound")
      ->capture_default_str();
  app.add_option("--ladder-max-exp", cfg.ladder_max_exp,
                 "Constant search covers 2^0 .. 2^k")
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "Seed echoed into reports")
      ->capture_default_str();

  std::string spec;
  std::string against;
  std::string family;
  std::string export_format = "json";
  std::string check_id;
  std::string verify_id;
  std::vector<std::string> verify_inputs;
  std::vector<double> ells{1.0};
  std::vector<double> report_ells{1.0, 2.0};
  std::size_t d_step = 1;
  double eval_log_u = 0.0;
  double eval_t = 0.0;
  double eval_x = 0.0;
  bool list_ids = false;

  CLI::App* seq_cmd =
      app.add_subcommand("seq", "Build a sequence and export it");
  seq_cmd->fallthrough();
  seq_cmd->add_option("--spec,--seq", spec, "Sequence spec (inline or file)")
      ->required();
  seq_cmd->add_option("--export", export_format, "Output format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  CLI::App* omega_cmd = app.add_subcommand(
      "omega", "Weight function of a sequence (plot CSV or point value)");
  omega_cmd->fallthrough();
  omega_cmd->add_option("--seq,--spec", spec, "Sequence spec")->required();
  CLI::Option* opt_eval_log = omega_cmd->add_option(
      "--eval-log", eval_log_u, "Evaluate at u = log t instead of exporting");
  CLI::Option* opt_eval_t = omega_cmd->add_option(
      "--eval", eval_t, "Evaluate at t instead of exporting");
  opt_eval_log->excludes(opt_eval_t);

  CLI::App* conj_cmd = app.add_subcommand(
      "conjugate", "Conjugate of the weight function (plot CSV or point value)");
  conj_cmd->fallthrough();
  conj_cmd->add_option("--seq,--spec", spec, "Sequence spec")->required();
  CLI::Option* opt_eval_x = conj_cmd->add_option(
      "--eval", eval_x, "Evaluate at x instead of exporting");

  CLI::App* matrix_cmd = app.add_subcommand(
      "matrix", "Rows of the weight family generated by a sequence");
  matrix_cmd->fallthrough();
  matrix_cmd->add_option("--omega,--seq", spec, "Sequence spec generating the weight function")
      ->required();
  matrix_cmd->add_option("--ell", ells, "Row parameters")
      ->delimiter(',')
      ->capture_default_str();

  CLI::App* check_cmd =
      app.add_subcommand("check", "Run one growth-condition check");
  check_cmd->fallthrough();
  check_cmd
      ->add_option("condition", check_id,
                   "One of: lc, mg, mg-root, genmg, mixed-root, weaksep, "
                   "leq, dominated, equivalent, omega, matrix-root")
      ->required();
  check_cmd->add_option("--seq,--spec", spec, "Sequence spec")->required();
  check_cmd->add_option("--against", against, "Second sequence spec");
  check_cmd->add_option("--d", d_step, "Step parameter for genmg/mixed-root")
      ->capture_default_str();

  CLI::App* gindex_cmd =
      app.add_subcommand("gindex", "Minimal passing root step of a sequence");
  gindex_cmd->fallthrough();
  gindex_cmd->add_option("--seq,--spec", spec, "Sequence spec")->required();

  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "Run one named cross-check, or 'all' for the whole suite");
  verify_cmd->fallthrough();
  verify_cmd->add_option("id", verify_id, "Check id, or 'all'");
  verify_cmd->add_option("--inputs", verify_inputs, "Input sequence specs")
      ->delimiter(',');
  verify_cmd->add_option("--family", family, "Family spec for 'verify all'");
  verify_cmd->add_flag("--list", list_ids, "List accepted check ids");

  CLI::App* report_cmd = app.add_subcommand(
      "report", "Full artifact bundle for one sequence");
  report_cmd->fallthrough();
  report_cmd->add_option("--seq,--spec", spec, "Sequence spec")->required();
  report_cmd->add_option("--ell", report_ells, "Row parameters")
      ->delimiter(',')
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  int exit_code = 0;
  Emitter emit;
  try {
    if (*seq_cmd) {
      SeqPtr s = make_sequence(spec, cfg);
      char* text = nullptr;
      if (export_format == "csv") {
        ok(wc_sequence_csv(s.get(), &text));
        emit.add("sequence.csv", take_string(text));
      } else {
        ok(wc_sequence_summary_json(s.get(), &text));
        emit.add("sequence.json", take_string(text));
      }
    } else if (*omega_cmd) {
      SeqPtr s = make_sequence(spec, cfg);
      FnPtr f = make_weightfn(s.get());
      if (opt_eval_log->count() > 0 || opt_eval_t->count() > 0) {
        double value = 0.0;
        std::string json;
        if (opt_eval_log->count() > 0) {
          ok(wc_weightfn_eval_log(f.get(), eval_log_u, &value));
          json = "{\"u\": " + g17(eval_log_u) +
                 ", \"value\": " + g17(value) + "}";
        } else {
          ok(wc_weightfn_eval(f.get(), eval_t, &value));
          json = "{\"t\": " + g17(eval_t) + ", \"value\": " + g17(value) + "}";
        }
        emit.add("omega_eval.json", json);
      } else {
        char* text = nullptr;
        ok(wc_weightfn_csv(f.get(), &text));
        emit.add("omega.csv", take_string(text));
      }
    } else if (*conj_cmd) {
      SeqPtr s = make_sequence(spec, cfg);
      FnPtr f = make_weightfn(s.get());
      ConjPtr c;
      {
        wc_conjugate* raw = nullptr;
        ok(wc_conjugate_of(f.get(), &raw));
        c.reset(raw);
      }
      if (opt_eval_x->count() > 0) {
        double value = 0.0;
        ok(wc_conjugate_eval(c.get(), eval_x, &value));
        emit.add("conjugate_eval.json", "{\"x\": " + g17(eval_x) +
                                            ", \"value\": " + g17(value) + "}");
      } else {
        char* text = nullptr;
        ok(wc_conjugate_csv(c.get(), &text));
        emit.add("conjugate.csv", take_string(text));
      }
    } else if (*matrix_cmd) {
      SeqPtr s = make_sequence(spec, cfg);
      FnPtr f = make_weightfn(s.get());
      MatPtr mat;
      {
        wc_matrix* raw = nullptr;
        ok(wc_matrix_of(f.get(), &raw));
        mat.reset(raw);
      }
      if (ells.empty()) usage_error("at least one --ell value is required");
      for (double ell : ells) {
        wc_sequence* row_raw = nullptr;
        ok(wc_matrix_row(mat.get(), ell, &row_raw));
        SeqPtr row(row_raw);
        char* text = nullptr;
        ok(wc_sequence_csv(row.get(), &text));
        emit.add("row_" + fmt_ell(ell) + ".csv", take_string(text));
      }
    } else if (*check_cmd) {
      SeqPtr s = make_sequence(spec, cfg);
      char* text = nullptr;
      if (check_id == "lc" || check_id == "mg" || check_id == "mg-root") {
        ok(wc_check_json(s.get(), check_id.c_str(), &cfg, &text));
      } else if (check_id == "genmg") {
        ok(wc_genmg_json(s.get(), d_step, &cfg, &text));
      } else if (check_id == "mixed-root") {
        if (against.empty()) usage_error("mixed-root needs --against");
        SeqPtr m = make_sequence(against, cfg);
        ok(wc_mixed_root_json(s.get(), m.get(),
                              static_cast<unsigned>(d_step), &cfg, &text));
      } else if (check_id == "weaksep") {
        if (against.empty()) usage_error("weaksep needs --against");
        SeqPtr m = make_sequence(against, cfg);
        ok(wc_weak_separativity_json(s.get(), m.get(), &cfg, &text));
      } else if (check_id == "leq" || check_id == "dominated" ||
                 check_id == "equivalent") {
        if (against.empty()) usage_error(check_id + " needs --against");
        SeqPtr m = make_sequence(against, cfg);
        ok(wc_relate_json(s.get(), m.get(), check_id.c_str(), &text));
      } else if (check_id == "omega") {
        FnPtr f = make_weightfn(s.get());
        ok(wc_omega_conditions_json(f.get(), &cfg, &text));
      } else if (check_id == "matrix-root") {
        FnPtr f = make_weightfn(s.get());
        ok(wc_matrix_root_json(f.get(), &cfg, &text));
      } else {
        usage_error("unknown condition '" + check_id + "'");
      }
      emit.add("check_" + check_id + ".json", take_string(text));
    } else if (*gindex_cmd) {
      SeqPtr s = make_sequence(spec, cfg);
      char* text = nullptr;
      ok(wc_growth_index_json(s.get(), &cfg, &text));
      emit.add("gindex.json", take_string(text));
    } else if (*verify_cmd) {
      if (list_ids) {
        char* text = nullptr;
        ok(wc_verify_ids(&text));
        emit.add("verify_ids.txt", take_string(text));
      } else if (verify_id.empty()) {
        usage_error("verify needs a check id, 'all', or --list");
      } else if (verify_id == "all") {
        if (family.empty()) usage_error("verify all needs --family");
        SeqPtr s = make_sequence(family, cfg);
        char* text = nullptr;
        int severity = 0;
        ok(wc_verify_all_json(s.get(), family.c_str(), &cfg, &text,
                              &severity));
        emit.add("verify_all.json", take_string(text));
        if (severity >= 2) exit_code = 2;
      } else {
        if (verify_inputs.empty())
          usage_error("verify needs at least one --inputs spec");
        std::vector<SeqPtr> owned;
        std::vector<const wc_sequence*> raw;
        for (const auto& in : verify_inputs) {
          owned.push_back(make_sequence(in, cfg));
          raw.push_back(owned.back().get());
        }
        char* text = nullptr;
        int severity = 0;
        ok(wc_verify_json(verify_id.c_str(), raw.data(), raw.size(), &cfg,
                          &text, &severity));
        emit.add("verify_" + verify_id + ".json", take_string(text));
        if (severity >= 2) exit_code = 2;
      }
    } else if (*report_cmd) {
      SeqPtr s = make_sequence(spec, cfg);
      FnPtr f = make_weightfn(s.get());
      char* text = nullptr;
      ok(wc_sequence_summary_json(s.get(), &text));
      emit.add("summary.json", take_string(text));
      ok(wc_sequence_csv(s.get(), &text));
      emit.add("sequence.csv", take_string(text));
      ok(wc_weightfn_csv(f.get(), &text));
      emit.add("omega.csv", take_string(text));
      {
        wc_conjugate* raw = nullptr;
        ok(wc_conjugate_of(f.get(), &raw));
        ConjPtr c(raw);
        ok(wc_conjugate_csv(c.get(), &text));
        emit.add("conjugate.csv", take_string(text));
      }
      ok(wc_omega_conditions_json(f.get(), &cfg, &text));
      emit.add("conditions.json", take_string(text));
      ok(wc_growth_index_json(s.get(), &cfg, &text));
      emit.add("gindex.json", take_string(text));
      {
        wc_matrix* mraw = nullptr;
        ok(wc_matrix_of(f.get(), &mraw));
        MatPtr mat(mraw);
        for (double ell : report_ells) {
          wc_sequence* row_raw = nullptr;
          ok(wc_matrix_row(mat.get(), ell, &row_raw));
          SeqPtr row(row_raw);
          ok(wc_sequence_csv(row.get(), &text));
          emit.add("row_" + fmt_ell(ell) + ".csv", take_string(text));
        }
      }
    }
    emit.flush();
  } catch (const Failure& f) {
    return f.code;
  }
  return exit_code;
}
