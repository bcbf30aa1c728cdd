#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "doctest.h"
#include "errors.hpp"
#include "jsonio.hpp"
#include "random_lc.hpp"
#include "report.hpp"
#include "sequence.hpp"
#include "theorems.hpp"
#include "weightfun.hpp"

using weightcalc::Direction;
using weightcalc::LogSequence;
using weightcalc::RunConfig;
using weightcalc::TheoremReport;

namespace {

const Direction& direction_named(const TheoremReport& rep,
                                 const std::string& name) {
  for (const Direction& d : rep.directions) {
    if (d.name == name) return d;
  }
  REQUIRE_MESSAGE(false, "missing direction: " << name << " in " << rep.id);
  static Direction dummy;
  return dummy;
}

double constant_of(const Direction& d, const std::string& key) {
  for (const auto& kv : d.constants) {
    if (kv.first == key) return kv.second;
  }
  REQUIRE_MESSAGE(false, "missing constant: " << key << " in " << d.name);
  return 0.0;
}

RunConfig quick_cfg() {
  RunConfig cfg;
  cfg.truncation = 256;
  return cfg;
}

}  // namespace

TEST_CASE("registry lists every statement once") {
  const std::vector<std::string> ids = weightcalc::verify_ids();
  CHECK(ids.size() == 22);
  CHECK(ids.front() == "tilde-omega-comparison");
  CHECK(std::count(ids.begin(), ids.end(), "product-convolution") == 1);
  // No duplicates.
  std::vector<std::string> sorted = ids;
  std::sort(sorted.begin(), sorted.end());
  CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
}

TEST_CASE("dispatcher rejects unknown ids and empty input lists") {
  const std::vector<LogSequence> one{LogSequence::gevrey(1.0, 32)};
  CHECK_THROWS_AS(
      (void)weightcalc::run_verify("no-such-statement", one, RunConfig{}),
      weightcalc::ParamError);
  const std::vector<LogSequence> none;
  CHECK_THROWS_AS(
      (void)weightcalc::run_verify("tilde-omega-comparison", none, RunConfig{}),
      weightcalc::ParamError);
}

TEST_CASE("envelope characterization of the growth index on q-geometric data") {
  const LogSequence q2 = LogSequence::q_gevrey(2.0, 512);
  const RunConfig cfg = quick_cfg();

  const TheoremReport at4 =
      weightcalc::verify_index_omega_characterization(q2, 4, cfg);
  CHECK(at4.overall == "consistent");
  const Direction& head = direction_named(at4, "envelope-bound-at-given-step");
  CHECK(head.status == weightcalc::DirectionStatus::Consistent);
  CHECK(constant_of(head, "A") >= 1.0);
  CHECK(constant_of(head, "C") >= 0.0);
  CHECK(direction_named(at4, "index-from-envelope").status ==
        weightcalc::DirectionStatus::Consistent);

  const TheoremReport at1 =
      weightcalc::verify_index_omega_characterization(q2, 1, cfg);
  CHECK(at1.overall == "indeterminate");
  CHECK(direction_named(at1, "envelope-bound-at-given-step").status ==
        weightcalc::DirectionStatus::Indeterminate);
  CHECK(direction_named(at1, "index-from-envelope").status ==
        weightcalc::DirectionStatus::Vacuous);
  // The doubled-index fallback still succeeds: the index itself is finite.
  CHECK(direction_named(at1, "envelope-from-index").status ==
        weightcalc::DirectionStatus::Consistent);
}

TEST_CASE("envelope characterization accepts the factorial family at unit step") {
  const TheoremReport rep = weightcalc::verify_index_omega_characterization(
      LogSequence::gevrey(1.0, 512), 1, quick_cfg());
  CHECK(rep.overall == "consistent");
  CHECK(direction_named(rep, "unit-step-matches-absorption").status ==
        weightcalc::DirectionStatus::Consistent);
}

TEST_CASE("power comparison pins its constants on the factorial family") {
  const LogSequence fact = LogSequence::gevrey(1.0, 512);
  const TheoremReport rep =
      weightcalc::verify_power_comparison(fact, fact, 2, quick_cfg());
  CHECK(rep.overall == "consistent");
  const Direction& search = direction_named(rep, "weight-bound-search");
  CHECK(search.status == weightcalc::DirectionStatus::Consistent);
  // The smallest ladder constant already works: the additive slack peaks at
  // log 2 (attained where the doubled quotient crosses the scale).
  const Direction& back = direction_named(rep, "sequence-bound-from-weight-bound");
  CHECK(back.status == weightcalc::DirectionStatus::Consistent);
  CHECK(constant_of(back, "A") == 1.0);
  CHECK(constant_of(back, "A1") == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(direction_named(rep, "weight-bound-from-sequence-bound").status ==
        weightcalc::DirectionStatus::Consistent);
}

TEST_CASE("every registered statement survives both built-in families") {
  const RunConfig cfg = quick_cfg();
  for (auto make : {+[] { return LogSequence::gevrey(1.0, 256); },
                    +[] { return LogSequence::gevrey(2.0, 256); },
                    +[] { return LogSequence::q_gevrey(2.0, 256); },
                    +[] { return LogSequence::q_gevrey(1.5, 256); }}) {
    const LogSequence m = make();
    const weightcalc::SuiteResult suite =
        weightcalc::verify_all(m, "family", cfg);
    CHECK(suite.reports.size() == weightcalc::verify_ids().size());
    CHECK(suite.overall != "violation-found");
    for (const TheoremReport& rep : suite.reports) {
      CHECK_MESSAGE(rep.overall != "violation-found",
                    "violation in " << rep.id);
    }
  }
}

TEST_CASE("every registered statement survives random log-convex input") {
  RunConfig cfg = quick_cfg();
  cfg.truncation = 128;
  for (std::uint64_t seed : {7ULL, 19ULL}) {
    const std::vector<LogSequence> inputs{weightcalc::random_lc(seed, 128)};
    for (const std::string& id : weightcalc::verify_ids()) {
      const TheoremReport rep = weightcalc::run_verify(id, inputs, cfg);
      CHECK_MESSAGE(rep.overall != "violation-found",
                    "violation in " << id << " at seed " << seed);
    }
  }
}

TEST_CASE("suite output is deterministic") {
  RunConfig cfg = quick_cfg();
  cfg.truncation = 128;
  const LogSequence m = LogSequence::q_gevrey(2.0, 128);
  const std::string a =
      weightcalc::to_json(weightcalc::verify_all(m, "repeat", cfg));
  const std::string b =
      weightcalc::to_json(weightcalc::verify_all(m, "repeat", cfg));
  CHECK(a == b);
  CHECK(a.find("\"family\": \"repeat\"") != std::string::npos);
}

TEST_CASE("structured reports carry the run parameters") {
  RunConfig cfg = quick_cfg();
  cfg.seed = 77;
  const LogSequence m = LogSequence::gevrey(1.0, 128);
  const TheoremReport rep = weightcalc::verify_absorption_mg(m, cfg);
  CHECK(rep.id == "absorption-mg");
  CHECK(rep.seed == 77);
  bool has_truncation = false;
  for (const auto& kv : rep.inputs) {
    if (kv.first == "P" && kv.second == "128") has_truncation = true;
  }
  CHECK(has_truncation);
  CHECK_FALSE(rep.directions.empty());
  const std::string js = weightcalc::to_json(rep);
  CHECK(js.find("\"id\": \"absorption-mg\"") != std::string::npos);
  CHECK(js.find("\"overall\"") != std::string::npos);
}
