#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <random>
#include <sys/wait.h>

#include "oracles.hpp"
#include "zigzag/report.hpp"
#include "zigzag/zigzag.hpp"

using namespace zigzag;

namespace {

struct Run {
  int code;
  std::string out;
};

/// Runs the CLI with stderr merged into stdout.
Run cli(const std::string& args) {
  std::string cmd = std::string(ZIGZAG_CLI) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, {}};
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string fixture(const char* name) { return std::string(GRAPHS_DIR) + "/" + name; }

}  // namespace

// ---- serialization ------------------------------------------------------------

TEST(Report, UpSetTokens) {
  EXPECT_EQ(upset_json(UpSet::zero()), Json::array({"e"}));
  EXPECT_EQ(upset_json(UpSet::top()), Json::array());
  EXPECT_EQ(upset_from_json(Json::array({"--", "+", "+-"})), canonical_upset({Word("+"), Word("--")}));
  EXPECT_THROW(upset_from_json(Json("+")), input_error);
}

TEST(Report, MatrixJsonRoundTrip) {
  std::mt19937 rng(1);
  for (int t = 0; t < 20; ++t) {
    DiGraph g = oracle::random_graph(rng, 4, 0.3);
    auto d = distance_matrix(g);
    Json j = matrix_json(d);
    EXPECT_EQ(matrix_from_json(Json::parse(j.dump())), d);
  }
}

TEST(Report, MatrixKeysWithCommasInNames) {
  DiGraph g(std::vector<std::string>{"a,b", "c"});
  g.add_arc(0, 1);
  auto d = distance_matrix(g);
  EXPECT_EQ(matrix_from_json(matrix_json(d)), d);
  Json bad = matrix_json(d);
  bad["d"].erase("c,c");
  EXPECT_THROW(matrix_from_json(bad), input_error);
}

TEST(Report, ReportsAreDeterministic) {
  DiGraph g(3);
  g.add_arc(0, 1);
  g.add_arc(1, 2);
  g.add_arc(2, 0);
  EXPECT_EQ(verdict_json(g, is_absolute_retract(g)).dump(), verdict_json(g, is_absolute_retract(g)).dump());
  EXPECT_EQ(verdict_text(g, is_absolute_retract(g)), verdict_text(g, is_absolute_retract(g)));
}

// ---- command line -----------------------------------------------------------

TEST(Cli, DistanceOfThreeCycle) {
  auto r = cli("distance " + fixture("c3.dg") + " 0 1");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{+, --}\n");
}

TEST(Cli, CheckArExitCodes) {
  auto yes = cli("check-ar " + fixture("path2.dg"));
  EXPECT_EQ(yes.code, 0);
  EXPECT_NE(yes.out.find("absolute retract: true"), std::string::npos);
  auto no = cli("check-ar " + fixture("c3.dg"));
  EXPECT_EQ(no.code, 1);
  EXPECT_NE(no.out.find("B(0, ^+) = {0, 1}"), std::string::npos) << no.out;
  EXPECT_NE(no.out.find("B(1, ^+) = {1, 2}"), std::string::npos) << no.out;
}

TEST(Cli, CheckArJson) {
  auto r = cli("check-ar --json " + fixture("c3.dg"));
  EXPECT_EQ(r.code, 1);
  Json j = Json::parse(r.out);
  EXPECT_FALSE(j["absolute_retract"].get<bool>());
  EXPECT_EQ(j["two_helly"]["witness"].size(), 3u);
}

TEST(Cli, InputErrorsExitTwo) {
  auto bad = cli("analyze " + fixture("malformed.dg"));
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.out.find("malformed.dg:3:"), std::string::npos) << bad.out;
  EXPECT_EQ(cli("analyze /nonexistent.dg").code, 2);
  EXPECT_EQ(cli("distance " + fixture("c3.dg") + " 0 9").code, 2);
  EXPECT_EQ(cli("check-ar --frobnicate " + fixture("c3.dg")).code, 2);
  EXPECT_EQ(cli("").code, 2);
  EXPECT_EQ(cli("retract " + fixture("c3.dg") + " " + fixture("sub_path2.dg")).code, 2);
}

TEST(Cli, LoopWarning) {
  auto r = cli("analyze " + fixture("loop.dg"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("warning"), std::string::npos);
}

TEST(Cli, EmbedAndHull) {
  auto e = cli("embed --minimize " + fixture("alternating_c4.dg"));
  EXPECT_EQ(e.code, 0);
  EXPECT_NE(e.out.find("factors: 2"), std::string::npos) << e.out;
  EXPECT_EQ(cli("embed " + fixture("c3.dg")).code, 1);
  auto d = Json::parse(cli("embed --json --bound 3 " + fixture("disconnected.dg")).out);
  EXPECT_EQ(d["disconnected_bound"], 3);
  auto h = Json::parse(cli("hull --json --max-add 3 " + fixture("glued_paths.dg")).out);
  EXPECT_EQ(h["status"], "found");
  EXPECT_EQ(h["added"].size(), 2u);
  EXPECT_EQ(cli("hull --max-add 0 " + fixture("alternating_c4.dg")).code, 1);
}

TEST(Cli, Retract) {
  auto r = cli("retract " + fixture("zigzag_ppmpm.dg") + " " + fixture("sub_path2.dg"));
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("retraction: found"), std::string::npos);
}

TEST(Cli, AnalyzeIsDeterministic) {
  auto a = cli("analyze --json " + fixture("c4_reverted.dg"));
  auto b = cli("analyze --json " + fixture("c4_reverted.dg"));
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  Json j = Json::parse(a.out);
  EXPECT_EQ(matrix_from_json(j["distances"]), distance_matrix(parse_dg(std::string(
                                                  "0 1\n1 2\n2 3\n0 3\n")).graph));
  EXPECT_EQ(j["obstructions"]["transitivity"].size(), 1u);
}

TEST(Cli, Selftest) {
  auto r = cli("selftest --max-n 2");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("selftest: ok"), std::string::npos);
}
