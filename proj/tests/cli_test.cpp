#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>

#include "oscilspec_cli/format.hpp"

#ifdef OSCILSPEC_CLI_PATH

namespace {

struct Run {
  int code;
  std::string output;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(OSCILSPEC_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST(Cli, SpectrumTableIsTypesetInGroups) {
  auto r = run("spectrum --preset H --levels 1");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.output.find("0.807 741 647 209 432 44"), std::string::npos) << r.output;
}

TEST(Cli, BoxSpectrumJsonRoundTrips) {
  auto r = run("spectrum --preset box --L 1 --levels 3 --format json");
  ASSERT_EQ(r.code, 0);
  auto report = oscilspec::cli::parse_json_report(r.output);
  ASSERT_EQ(report.rows.size(), 3u);
  EXPECT_EQ(report.rows[0][4].substr(0, 16), "2.46740110027233");
  EXPECT_EQ(report.rows[1][4].substr(0, 16), "9.86960440108935");
  EXPECT_EQ(oscilspec::cli::render_json(report), r.output);
}

TEST(Cli, InsufficientPrecisionForReproduction) {
  auto r = run("reproduce --table 1 --digits 10");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.output.find("insufficient precision requested"), std::string::npos) << r.output;
}

TEST(Cli, ConfigErrors) {
  EXPECT_EQ(run("spectrum --preset nowhere").code, 1);
  EXPECT_EQ(run("spectrum --preset A --digits 5").code, 1);
  EXPECT_EQ(run("spectrum").code, 1);
  EXPECT_EQ(run("spectrum --preset A --format xml").code, 1);
  EXPECT_EQ(run("frobnicate").code, 1);
}

TEST(Cli, NonConvergenceExitCode) {
  auto r = run("spectrum --preset A --max-order 40");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.output.find("potential A"), std::string::npos) << r.output;
}

TEST(Cli, WavefunctionCsv) {
  auto r = run("wavefunction --preset B --level 1 --points 5 --format csv");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.output.rfind("x,psi\n", 0), 0u);
  EXPECT_NE(r.output.find("\n0.000000000000,0\n"), std::string::npos) << r.output;
  EXPECT_NE(r.output.find("\n4.000000000000,0\n"), std::string::npos) << r.output;
}

TEST(Cli, ConfigFileAndOutputPath) {
  const std::string cfg = testing::TempDir() + "oscilspec_cfg.json";
  const std::string out = testing::TempDir() + "oscilspec_out.csv";
  std::ofstream(cfg) << R"({"name": "osc", "potential": {"2": "1"}, "L": "10", "digits": 14, "levels": 2})";
  auto r = run("spectrum --config " + cfg + " --format csv --out " + out);
  ASSERT_EQ(r.code, 0) << r.output;
  std::ifstream in(out);
  std::string header, first, second;
  std::getline(in, header);
  std::getline(in, first);
  std::getline(in, second);
  EXPECT_EQ(header, "potential,L,level,parity,energy,digits,nodes,doublet");
  EXPECT_NE(first.find(",1.0000000000000"), std::string::npos) << first;
  EXPECT_NE(second.find(",3.0000000000000"), std::string::npos) << second;
}

TEST(Cli, MomentsAndVerify) {
  auto m = run("moments --preset A --moments 0,1 --format csv");
  ASSERT_EQ(m.code, 0);
  EXPECT_NE(m.output.find("A,0,0,1.0000"), std::string::npos) << m.output;
  EXPECT_NE(m.output.find("A,0,1,1.704272304356668518"), std::string::npos) << m.output;
  auto v = run("verify --preset box --levels 2 --fd-points 1000 --format csv");
  EXPECT_EQ(v.code, 0) << v.output;
  EXPECT_NE(v.output.find("2.467401100272"), std::string::npos);
}

#endif
