#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int status = -1;
  std::string out;
};

// stdout only; stderr is merged when requested.
Run run(const std::string& args, bool merge_stderr = false) {
  std::string cmd = std::string(QC_CLI_PATH) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string data(const char* name) { return std::string(QC_TEST_DATA) + "/" + name; }

nlohmann::json parsed(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("verify-map") {
  const Run r = run("verify-map --n 2");
  CHECK(r.status == 0);
  const auto j = parsed(r);
  CHECK(j["summary"]["exact_zero"].get<int>() >= 12);
  CHECK(j["summary"]["failed"] == 0);
  CHECK(j["exit_code"] == 0);

  const Run text = run("verify-map --n 3 --output text");
  CHECK(text.status == 0);
  CHECK(text.out.find("summary:") != std::string::npos);
}

TEST_CASE("poincare") {
  const Run r = run("poincare --n 2");
  CHECK(r.status == 0);
  CHECK(parsed(r)["poincare"]["deformed"]["rank"] == 16);
  CHECK(parsed(r)["poincare"]["deformed"]["expected"] == 16);
}

TEST_CASE("rmatrix") {
  const Run r = run("rmatrix --algebra sl --n 2 --q-numeric 1");
  CHECK(r.status == 0);
  const auto entries = parsed(r)["rmatrix"]["entries"];
  const auto expected = nlohmann::json::parse(R"([[0, 0, "1"], [1, 2, "1"], [2, 1, "1"], [3, 3, "1"]])");
  CHECK(entries == expected);

  const Run sp = run("rmatrix --algebra sp --n 2 --input " + data("sp2_rhat.json"));
  CHECK(sp.status == 0);
  CHECK(parsed(sp)["summary"]["experiment"] == true);
}

TEST_CASE("covariance, invariants, eval") {
  CHECK(run("covariance --n 2").status == 0);
  CHECK(run("invariants --n 2").status == 0);
  CHECK(run("invariants --n 2 --input " + data("invariant_I1q.json")).status == 0);
  const Run e = run("eval --expr \"(q^2-1)/(q-1)\"");
  CHECK(e.status == 0);
  CHECK(parsed(e)["value"] == "q + 1");
}

TEST_CASE("chain-experiment") {
  const Run r = run("chain-experiment --m 2 --n 2");
  CHECK(r.status == 0);
  CHECK(parsed(r)["verdicts"].size() == 4);
  CHECK(run("chain-experiment --m 2 --n 2 --variant RM-braided-mixed --scales 1,q").status == 0);
}

TEST_CASE("verification failure exits 1 and still emits the report") {
  const Run r = run("verify-map --n 2 --input " + data("undeformed2.json"));
  CHECK(r.status == 1);
  const auto j = parsed(r);
  CHECK(j["exit_code"] == 1);
  CHECK(j["summary"]["failed"] == 7);
}

TEST_CASE("errors exit 2") {
  const Run bad = run("rmatrix --algebra sp --input " + data("malformed.json"), true);
  CHECK(bad.status == 2);
  CHECK(bad.out.find("position") != std::string::npos);

  const Run pole = run("eval --expr \"1/(q-2)\" --q-numeric 2", true);
  CHECK(pole.status == 2);
  CHECK(pole.out.find("pole") != std::string::npos);

  CHECK(run("verify-map --n 0").status == 2);
  CHECK(run("verify-map --n 9").status == 2);
  CHECK(run("frobnicate").status == 2);
  CHECK(run("verify-map --output yaml").status == 2);
  CHECK(run("rmatrix --algebra sp --n 2 --input " + data("sp2_rhat.json") + " --q-numeric 1").status == 2);
  CHECK(run("chain-experiment --variant sideways").status == 2);
}

TEST_CASE("dimension guard is configurable") {
  CHECK(run("poincare --n 5").status == 0);
  const std::string env = "QCLIFFORD_MAX_DIM=16 ";
  FILE* pipe = popen((env + QC_CLI_PATH + " verify-map --n 5 >/dev/null 2>&1").c_str(), "r");
  REQUIRE(pipe != nullptr);
  const int raw = pclose(pipe);
  CHECK(WEXITSTATUS(raw) == 2);
}
