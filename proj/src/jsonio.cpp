#include "jsonio.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "errors.hpp"

namespace weightcalc {
namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json constants_obj(
    const std::vector<std::pair<std::string, double>>& cs) {
  ordered_json o = ordered_json::object();
  for (const auto& [k, v] : cs) o[k] = v;
  return o;
}

ordered_json ladder_arr(const std::vector<LadderPoint>& pts) {
  ordered_json a = ordered_json::array();
  for (const auto& p : pts) {
    ordered_json o = ordered_json::object();
    o["window"] = p.window;
    o["sup"] = p.sup;
    a.push_back(std::move(o));
  }
  return a;
}

ordered_json verdict_obj(const ConditionVerdict& v) {
  ordered_json o = ordered_json::object();
  o["id"] = v.id;
  o["holds"] = v.holds;
  o["classification"] = to_string(v.cls);
  o["certified"] = v.certified;
  if (!v.constants.empty()) o["constants"] = constants_obj(v.constants);
  o["log_sup"] = v.log_sup;
  if (v.witness_index != 0) o["witness_index"] = v.witness_index;
  if (!v.ladder.empty()) o["ladder"] = ladder_arr(v.ladder);
  if (!v.note.empty()) o["note"] = v.note;
  if (v.domain_errors != 0) o["domain_errors"] = v.domain_errors;
  return o;
}

ordered_json direction_obj(const Direction& d) {
  ordered_json o = ordered_json::object();
  o["name"] = d.name;
  o["kind"] = d.kind;
  o["status"] = to_string(d.status);
  o["premise"] = verdict_obj(d.premise);
  if (!d.conclusion.id.empty() || !d.conclusion.constants.empty()) {
    o["conclusion"] = verdict_obj(d.conclusion);
  }
  if (!d.correspondences.empty()) o["correspondences"] = d.correspondences;
  if (!d.constants.empty()) o["constants"] = constants_obj(d.constants);
  o["max_violation"] = d.max_violation;
  if (!d.note.empty()) o["note"] = d.note;
  return o;
}

ordered_json report_obj(const TheoremReport& r) {
  ordered_json o = ordered_json::object();
  o["id"] = r.id;
  o["overall"] = r.overall;
  o["seed"] = r.seed;
  if (!r.inputs.empty()) {
    ordered_json in = ordered_json::object();
    for (const auto& [k, v] : r.inputs) in[k] = v;
    o["inputs"] = std::move(in);
  }
  ordered_json dirs = ordered_json::array();
  for (const auto& d : r.directions) dirs.push_back(direction_obj(d));
  o["directions"] = std::move(dirs);
  return o;
}

std::string dump(const ordered_json& j, int indent) {
  return indent > 0 ? j.dump(indent) : j.dump();
}

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string trimmed(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& text, const std::string& what) {
  const std::string t = trimmed(text);
  double out = 0.0;
  const char* begin = t.data();
  const char* end = t.data() + t.size();
  const auto res = std::from_chars(begin, end, out);
  if (res.ec != std::errc{} || res.ptr != end || t.empty()) {
    throw ParseError(what + ": expected a number, got \"" + text + "\"");
  }
  return out;
}

}  // namespace

std::string to_json(const ConditionVerdict& v, int indent) {
  return dump(verdict_obj(v), indent);
}

std::string to_json(const GrowthIndexResult& g, int indent) {
  ordered_json o = ordered_json::object();
  o["finite"] = g.finite;
  if (g.finite) o["g"] = g.g;
  o["d_max"] = g.d_max;
  ordered_json per = ordered_json::array();
  for (const auto& v : g.per_d) per.push_back(verdict_obj(v));
  o["per_d"] = std::move(per);
  if (!g.note.empty()) o["note"] = g.note;
  return dump(o, indent);
}

std::string to_json(const OmegaConditions& oc, int indent) {
  ordered_json o = ordered_json::object();
  o["om0"] = verdict_obj(oc.om0);
  o["om1"] = verdict_obj(oc.om1);
  o["om3"] = verdict_obj(oc.om3);
  o["om4"] = verdict_obj(oc.om4);
  o["om6"] = verdict_obj(oc.om6);
  o["strong_nq"] = verdict_obj(oc.strong_nq);
  ordered_json fc = ordered_json::array();
  for (const auto& [factor, v] : oc.factor_checks) {
    ordered_json e = ordered_json::object();
    e["factor"] = factor;
    e["verdict"] = verdict_obj(v);
    fc.push_back(std::move(e));
  }
  o["factor_checks"] = std::move(fc);
  o["factor_consistent"] = oc.factor_consistent;
  return dump(o, indent);
}

std::string to_json(const TheoremReport& r, int indent) {
  return dump(report_obj(r), indent);
}

std::string to_json(const SuiteResult& s, int indent) {
  ordered_json o = ordered_json::object();
  o["family"] = s.family;
  o["overall"] = s.overall;
  o["seed"] = s.seed;
  o["truncation"] = s.truncation;
  ordered_json reps = ordered_json::array();
  for (const auto& r : s.reports) reps.push_back(report_obj(r));
  o["reports"] = std::move(reps);
  return dump(o, indent);
}

std::string to_json(const MatrixRelationReport& r, int indent) {
  ordered_json o = ordered_json::object();
  o["kind"] = r.kind == MatrixRelateKind::Roumieu ? "roumieu" : "beurling";
  o["holds"] = r.holds;
  ordered_json entries = ordered_json::array();
  for (const auto& e : r.entries) {
    ordered_json eo = ordered_json::object();
    eo["x"] = e.x;
    eo["y"] = e.y;
    eo["found"] = e.found;
    eo["verdict"] = verdict_obj(e.verdict);
    entries.push_back(std::move(eo));
  }
  o["entries"] = std::move(entries);
  return dump(o, indent);
}

std::string sequence_summary_json(const LogSequence& m, std::size_t head,
                                  int indent) {
  ordered_json o = ordered_json::object();
  const std::size_t P = m.truncation();
  o["truncation"] = P;
  switch (m.provenance().kind) {
    case FamilyKind::Gevrey:
      o["family"] = "gevrey";
      o["param"] = m.provenance().param;
      break;
    case FamilyKind::QGevrey:
      o["family"] = "qgevrey";
      o["log_q"] = m.provenance().param;
      break;
    case FamilyKind::None:
      o["family"] = "generic";
      break;
  }
  o["normalized"] = m.is_normalized();
  const auto [convex, first_bad] = m.is_log_convex();
  o["log_convex"] = convex;
  if (!convex) o["first_nonconvex_index"] = first_bad;
  const std::size_t h = std::min(head, P);
  ordered_json logs = ordered_json::array();
  ordered_json quots = ordered_json::array();
  for (std::size_t p = 0; p <= h; ++p) {
    logs.push_back(m.log_at(p));
    quots.push_back(m.quotient_at(p));
  }
  o["head_logM"] = std::move(logs);
  o["head_logmu"] = std::move(quots);
  o["final_logM"] = m.log_at(P);
  o["final_logmu"] = m.quotient_at(P);
  return dump(o, indent);
}

std::string sequence_csv(const LogSequence& m) {
  std::string out = "p,logM,logmu\n";
  for (std::size_t p = 0; p <= m.truncation(); ++p) {
    out += std::to_string(p);
    out += ',';
    out += g17(m.log_at(p));
    out += ',';
    out += g17(m.quotient_at(p));
    out += '\n';
  }
  return out;
}

std::string weightfn_csv(const LogPL& f) {
  std::string out = "u,value,slope\n";
  for (std::size_t i = 0; i < f.breakpoints.size(); ++i) {
    out += g17(f.breakpoints[i]);
    out += ',';
    out += g17(f.values[i]);
    out += ',';
    out += g17(f.slopes[i]);
    out += '\n';
  }
  out += g17(f.u_max);
  out += ',';
  out += g17(f.eval_log(f.u_max));
  out += ',';
  out += g17(f.final_slope());
  out += '\n';
  return out;
}

std::string conjugate_csv(const ConjugatePL& c) {
  std::string out = "x,value\n";
  for (std::size_t i = 0; i < c.xs.size(); ++i) {
    out += g17(c.xs[i]);
    out += ',';
    out += g17(c.vals[i]);
    out += '\n';
  }
  return out;
}

LogSequence parse_sequence_spec(const std::string& spec,
                                std::size_t default_truncation) {
  const std::string t = trimmed(spec);
  if (t.empty()) throw ParseError("sequence spec is empty");

  if (t.front() == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(t);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("sequence spec: ") + e.what());
    }
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
      throw ParseError("sequence spec: expected an object with a \"kind\"");
    }
    const std::string kind = j["kind"].get<std::string>();
    std::size_t P = default_truncation;
    if (j.contains("truncation")) {
      if (!j["truncation"].is_number_unsigned() ||
          j["truncation"].get<std::size_t>() < 1) {
        throw ParseError("sequence spec: \"truncation\" must be a positive integer");
      }
      P = j["truncation"].get<std::size_t>();
    }
    auto need_param = [&]() -> double {
      if (!j.contains("param") || !j["param"].is_number()) {
        throw ParseError("sequence spec: kind \"" + kind +
                         "\" needs a numeric \"param\"");
      }
      return j["param"].get<double>();
    };
    auto need_values = [&]() -> std::vector<double> {
      if (!j.contains("values") || !j["values"].is_array() ||
          j["values"].empty()) {
        throw ParseError("sequence spec: kind \"" + kind +
                         "\" needs a non-empty \"values\" array");
      }
      std::vector<double> out;
      out.reserve(j["values"].size());
      for (const auto& e : j["values"]) {
        if (!e.is_number()) {
          throw ParseError("sequence spec: \"values\" must all be numbers");
        }
        out.push_back(e.get<double>());
      }
      return out;
    };
    if (kind == "gevrey") return LogSequence::gevrey(need_param(), P);
    if (kind == "qgevrey") return LogSequence::q_gevrey(need_param(), P);
    if (kind == "quotients") {
      return LogSequence::from_quotients(need_values());
    }
    if (kind == "logs") return LogSequence::from_logs(need_values());
    throw ParseError("sequence spec: unknown kind \"" + kind + "\"");
  }

  const auto colon = t.find(':');
  if (colon == std::string::npos) {
    throw ParseError("sequence spec \"" + t +
                     "\": expected name:param or a JSON object");
  }
  const std::string name = trimmed(t.substr(0, colon));
  const std::string arg = t.substr(colon + 1);
  if (name == "gevrey") {
    return LogSequence::gevrey(parse_double(arg, "gevrey parameter"),
                               default_truncation);
  }
  if (name == "qgevrey") {
    return LogSequence::q_gevrey(parse_double(arg, "qgevrey parameter"),
                                 default_truncation);
  }
  throw ParseError("sequence spec: unknown family \"" + name + "\"");
}

}  // namespace weightcalc
