#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"

#ifndef WEIGHTCALC_CLI_PATH
#error "WEIGHTCALC_CLI_PATH must point at the command-line binary"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// Runs the CLI through the shell; WEIGHTCALC_OUT is cleared unless the caller
// provides their own environment prefix.
RunResult run(const std::string& args, const std::string& env = "WEIGHTCALC_OUT=") {
  const std::string cmd =
      env + " " + std::string(WEIGHTCALC_CLI_PATH) + " " + args;
  RunResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n = 0;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, n);
  const int status = pclose(pipe);
  res.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  return res;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

// Full-precision text of the stored fourth factorial value; the store keeps
// the running sum of quotient logs, so reproduce that exact accumulation.
std::string log24_cell() {
  double v = 0.0;
  for (int p = 2; p <= 4; ++p) v += std::log(static_cast<double>(p));
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

TEST_CASE("seq exports match the library values") {
  const RunResult csv = run("seq --seq gevrey:1 -P 8 --export csv");
  CHECK(csv.exit_code == 0);
  CHECK(contains(csv.out, "p,logM,logmu"));
  CHECK(contains(csv.out, log24_cell()));

  const RunResult js = run("seq --seq gevrey:1 -P 8");
  CHECK(js.exit_code == 0);
  CHECK(contains(js.out, "\"family\": \"gevrey\""));
  CHECK(contains(js.out, "\"truncation\": 8"));
}

TEST_CASE("spec files are accepted wherever inline specs are") {
  const std::filesystem::path dir =
      std::filesystem::temp_directory_path() / "wc_cli_specs";
  std::filesystem::create_directories(dir);
  const std::filesystem::path file = dir / "seq.json";
  {
    std::ofstream out(file);
    out << "{\"kind\": \"gevrey\", \"param\": 1, \"truncation\": 8}\n";
  }
  const RunResult res = run("seq --spec " + file.string() + " --export csv");
  CHECK(res.exit_code == 0);
  CHECK(contains(res.out, log24_cell()));
  std::filesystem::remove_all(dir);
}

TEST_CASE("omega point evaluation") {
  const RunResult res = run("omega --seq gevrey:1 -P 32 --eval 3");
  CHECK(res.exit_code == 0);
  CHECK(contains(res.out, "1.5040773967762742"));
}

TEST_CASE("growth index of the q-geometric family") {
  const RunResult res = run("gindex --seq qgevrey:2 -P 256");
  CHECK(res.exit_code == 0);
  CHECK(contains(res.out, "\"finite\": true"));
  CHECK(contains(res.out, "\"g\": 2"));
}

TEST_CASE("condition check reports the closed-form constant") {
  const RunResult res = run("check mg --seq gevrey:1 -P 64");
  CHECK(res.exit_code == 0);
  CHECK(contains(res.out, "\"holds\": true"));
  CHECK(contains(res.out, "\"C\": 2.0"));
}

TEST_CASE("repeated invocations are byte-identical") {
  const std::string args =
      "verify tilde-omega-comparison --inputs gevrey:1 -P 64 --seed 5";
  const RunResult a = run(args);
  const RunResult b = run(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(contains(a.out, "\"overall\""));
}

TEST_CASE("usage failures exit with code 1") {
  CHECK(run("check frobnicate --seq gevrey:1 -P 16 2>/dev/null").exit_code == 1);
  CHECK(run("2>/dev/null").exit_code == 1);
  CHECK(run("seq --seq bogus:1 -P 8 2>/dev/null").exit_code == 1);
  CHECK(run("omega --seq gevrey:1 -P 8 --eval -3 2>/dev/null").exit_code == 1);
}

TEST_CASE("whole-suite verification stays below the violation threshold") {
  const RunResult res = run("verify all --family qgevrey:2 -P 64");
  CHECK(res.exit_code == 0);
  CHECK(contains(res.out, "\"overall\""));
  CHECK_FALSE(contains(res.out, "\"overall\": \"violation-found\""));

  const RunResult ids = run("verify --list");
  CHECK(ids.exit_code == 0);
  CHECK(contains(ids.out, "tilde-omega-comparison"));
  CHECK(contains(ids.out, "product-convolution"));
}

TEST_CASE("artifacts land in the configured output directory") {
  const std::filesystem::path dir =
      std::filesystem::temp_directory_path() / "wc_cli_out";
  std::filesystem::remove_all(dir);
  const RunResult res = run("seq --seq gevrey:1 -P 8 --export csv",
                            "WEIGHTCALC_OUT=" + dir.string());
  CHECK(res.exit_code == 0);
  CHECK(res.out.empty());
  const std::filesystem::path file = dir / "sequence.csv";
  REQUIRE(std::filesystem::exists(file));
  std::ifstream in(file);
  std::string content((std::istreambuf_iterator<char>(in)),
                      std::istreambuf_iterator<char>());
  CHECK(contains(content, log24_cell()));
  std::filesystem::remove_all(dir);
}

TEST_CASE("matrix rows are emitted as separate named artifacts") {
  const RunResult res = run("matrix --seq gevrey:1 -P 32 --ell 1,2");
  CHECK(res.exit_code == 0);
  CHECK(contains(res.out, "# file: row_1.csv"));
  CHECK(contains(res.out, "# file: row_2.csv"));
}

TEST_CASE("report bundles every artifact for one sequence") {
  const RunResult res = run("report --seq gevrey:1 -P 16");
  CHECK(res.exit_code == 0);
  CHECK(contains(res.out, "# file: summary.json"));
  CHECK(contains(res.out, "# file: sequence.csv"));
  CHECK(contains(res.out, "# file: omega.csv"));
  CHECK(contains(res.out, "# file: conjugate.csv"));
  CHECK(contains(res.out, "# file: conditions.json"));
  CHECK(contains(res.out, "# file: gindex.json"));
  CHECK(contains(res.out, "# file: row_1.csv"));
  CHECK(contains(res.out, "# file: row_2.csv"));
}
