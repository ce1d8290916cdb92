#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <gtest/gtest.h>

#include "ennms/report.hpp"
#include "ennms/scenario.hpp"

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args, bool with_stderr = false) {
  const std::string cmd = "NO_COLOR=1 '" + std::string(ENNMS_CLI_PATH) + "' " + args + (with_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, {}};
  std::string out;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string fixture_path(const char* name) { return std::string(ENNMS_FIXTURE_DIR) + "/" + name + ".scn"; }

std::filesystem::path temp_file(const std::string& name, const std::string& contents) {
  const auto p = std::filesystem::temp_directory_path() / ("ennms-cli-" + std::to_string(::getpid()) + "-" + name);
  std::ofstream(p) << contents;
  return p;
}

}  // namespace

TEST(Cli, EvaluateEnterprise) {
  const auto r = run("evaluate " + fixture_path("enterprise"));
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("$4,859.0"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("Chosen: deploy"), std::string::npos);
  EXPECT_NE(r.out.find("-1.1488568"), std::string::npos);
  EXPECT_EQ(r.out.find("\x1b["), std::string::npos);
}

TEST(Cli, JsonIsByteIdenticalAcrossRuns) {
  const auto a = run("--format json evaluate builtin:carrier");
  const auto b = run("--format json evaluate builtin:carrier");
  ASSERT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  const auto j = ennms::Json::parse(a.out);
  EXPECT_EQ(j["chosen"], "te-linecard");
}

TEST(Cli, Breakeven) {
  const auto r = run("breakeven " + fixture_path("carrier") + " --option te-linecard");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("6.1562e-03"), std::string::npos) << r.out;
  const auto bad = run("breakeven " + fixture_path("carrier") + " --option nope");
  EXPECT_EQ(bad.status, 1);
}

TEST(Cli, Crossover) {
  const auto r = run("crossover builtin:carrier --option te-linecard --rival te-millisecond");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("3.2432e-04"), std::string::npos) << r.out;
}

TEST(Cli, SweepCsv) {
  const auto r = run("--format csv sweep builtin:enterprise --param rho --from 250000 --to 1e12 --steps 5 --log");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(r.out.rfind("parameter,value,ce_cents,ce,chosen\n", 0), 0u) << r.out;
  EXPECT_NE(r.out.find("1045750"), std::string::npos);
  const auto serial = run("--format csv sweep builtin:enterprise --param rho --from 250000 --to 1e12 --steps 5 --log --serial");
  EXPECT_EQ(serial.out, r.out);
}

TEST(Cli, CatalogAndCheck) {
  const auto c = run("catalog");
  EXPECT_EQ(c.status, 0);
  EXPECT_NE(c.out.find("TE /node"), std::string::npos);
  EXPECT_EQ(run("check builtin:enterprise").status, 0);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("evaluate /nonexistent/file.scn").status, 1);
  const auto bad = temp_file("bad.scn", "name = t\n[risk]\nrho = 1000\n[option a]\nprobability = 0.5\nvalue = 1\ncases = only\n");
  const auto r = run("check " + bad.string(), true);
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.out.find("option.a.probability"), std::string::npos) << r.out;
  std::filesystem::remove(bad);
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("frobnicate").status, 2);
  EXPECT_EQ(run("breakeven builtin:carrier").status, 2);
  EXPECT_EQ(run("--format xml evaluate builtin:carrier").status, 2);
  EXPECT_EQ(run("--format csv evaluate builtin:carrier").status, 2);
  EXPECT_EQ(run("sweep builtin:enterprise --param rho --from 1 --to 1 --steps 3").status, 1);
  EXPECT_EQ(run("sweep builtin:enterprise --param rho --from 1 --to 2 --steps many").status, 2);
}

TEST(Cli, FileRoundTrip) {
  const auto text = ennms::serialize_scenario(ennms::parse_scenario(ennms::builtin_fixture("carrier")));
  const auto p = temp_file("rt.scn", text);
  const auto a = run("--format json evaluate " + p.string());
  const auto b = run("--format json evaluate builtin:carrier");
  std::filesystem::remove(p);
  ASSERT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
}
