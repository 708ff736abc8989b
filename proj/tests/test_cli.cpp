#include <gtest/gtest.h>

#include <sstream>

#include "fixtures.hpp"
#include "rank1/cli.hpp"

namespace rank1 {
namespace {

using fixtures::data_file;

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  Outcome o;
  o.code = cli::run(args, in, out, err);
  o.out = out.str();
  o.err = err.str();
  return o;
}

bool contains(const std::string& text, std::string_view needle) { return text.find(needle) != std::string::npos; }

std::size_t count_lines(const std::string& text, std::string_view prefix) {
  std::istringstream ss(text);
  std::size_t n = 0;
  for (std::string line; std::getline(ss, line);)
    if (line.rfind(prefix, 0) == 0) ++n;
  return n;
}

TEST(Cli, CheckIsoChaconMirror) {
  const auto o = run({"check-iso", data_file("chacon.spec"), data_file("mirror.spec")});
  EXPECT_EQ(o.code, cli::kNo);
  EXPECT_TRUE(contains(o.out, "Thm3.1"));
  EXPECT_TRUE(contains(o.out, "0,1,0,0,1,1,0,1"));
}

TEST(Cli, CheckIsoEventualAgreement) {
  const auto o = run({"--format", "machine", "check-iso", data_file("chacon_e5.spec"), data_file("chacon.spec")});
  EXPECT_EQ(o.code, cli::kYes);
  EXPECT_TRUE(contains(o.out, "agreement: 5\n"));
}

TEST(Cli, CheckDisjointChaconMirror) {
  const auto o = run({"check-disjoint", data_file("chacon.spec"), data_file("mirror.spec")});
  EXPECT_EQ(o.code, cli::kYes);
  EXPECT_TRUE(contains(o.out, "Cor3.5-2′"));
}

TEST(Cli, ErgodicUpToFive) {
  const auto o = run({"--format", "machine", "ergodic", data_file("chacon.spec"), "--upto", "5"});
  EXPECT_EQ(o.code, cli::kYes);
  EXPECT_EQ(count_lines(o.out, "ed.a: "), 4u);
  const auto fail = run({"ergodic", data_file("double2.spec"), "--d", "2"});
  EXPECT_EQ(fail.code, cli::kNo);
}

TEST(Cli, CheckMsjCases) {
  EXPECT_EQ(run({"check-msj", data_file("chacon.spec")}).code, cli::kYes);
  const auto c = run({"--format", "machine", "check-msj", data_file("constant00.spec")});
  EXPECT_EQ(c.code, cli::kUndecided);
  EXPECT_TRUE(contains(c.out, "condition: c 0"));
  EXPECT_EQ(run({"check-msj", data_file("double2.spec")}).code, cli::kNo);
}

TEST(Cli, MachineOutputIsKeyValueLines) {
  const auto o = run({"--format", "machine", "check-iso", data_file("chacon.spec"), data_file("mirror.spec")});
  std::istringstream ss(o.out);
  std::size_t lines = 0;
  for (std::string line; std::getline(ss, line); ++lines) {
    const auto colon = line.find(": ");
    ASSERT_NE(colon, std::string::npos) << line;
    EXPECT_EQ(line.find(' '), colon + 1) << line;
  }
  EXPECT_GT(lines, 5u);
}

TEST(Cli, VerifyRoundTrips) {
  const std::vector<std::vector<std::string>> commands = {
      {"check-iso", data_file("chacon.spec"), data_file("mirror.spec")},
      {"check-iso", data_file("chacon_e5.spec"), data_file("chacon.spec")},
      {"check-disjoint", data_file("chacon.spec"), data_file("mirror.spec")},
      {"check-msj", data_file("chacon.spec")},
      {"check-msj", data_file("double2.spec")},
      {"ergodic", data_file("chacon.spec"), "--upto", "6"},
      {"ergodic", data_file("double2.spec"), "--d", "2"},
  };
  for (auto args : commands) {
    std::vector<std::string> full{"--format", "machine"};
    full.insert(full.end(), args.begin(), args.end());
    const auto verdict = run(full);
    std::vector<std::string> verify{"verify", args[1]};
    if (args.size() > 2 && args[2].find(".spec") != std::string::npos) verify.push_back(args[2]);
    const auto checked = run(verify, verdict.out);
    EXPECT_EQ(checked.code, cli::kYes) << args[0] << ": " << checked.out << checked.err;
  }
}

TEST(Cli, VerifyRejectsTampering) {
  auto verdict = run({"--format", "machine", "check-iso", data_file("chacon.spec"), data_file("mirror.spec")}).out;
  const auto pos = verdict.find("0,1,0,0,1,1,0,1 ");
  ASSERT_NE(pos, std::string::npos);
  verdict.replace(pos, 15, "1,0,1,1,0,0,1,0");
  const auto checked = run({"verify", data_file("chacon.spec"), data_file("mirror.spec")}, verdict);
  EXPECT_EQ(checked.code, cli::kNo);
  EXPECT_TRUE(contains(checked.out, "verified: no"));
}

TEST(Cli, StdinSpec) {
  const auto o = run({"validate", "-"}, "period:\nstage r=3 s=0,1\n");
  EXPECT_EQ(o.code, cli::kYes);
  EXPECT_TRUE(contains(o.out, "stage r=3 s=0,1"));
}

TEST(Cli, GenerateAndCanonical) {
  const auto g = run({"--depth", "2", "generate", data_file("chacon.spec")});
  EXPECT_EQ(g.code, cli::kYes);
  EXPECT_TRUE(contains(g.out, "v_2 = 0010001010010"));
  EXPECT_TRUE(contains(g.out, "h_2 = 13"));
  const auto c = run({"--depth", "4", "canonical", data_file("double1.spec")});
  EXPECT_TRUE(contains(c.out, "degenerate"));
  EXPECT_EQ(run({"--depth", "30", "--cap", "1000", "generate", data_file("chacon.spec")}).code, cli::kUndecided);
}

TEST(Cli, Labels) {
  const auto o = run({"labels", "--spec", data_file("chacon.spec"), "--level", "2", "--offset", "6"});
  EXPECT_EQ(o.code, cli::kYes);
  EXPECT_TRUE(contains(o.out, "λ_1 = 2, κ_1 = 0"));
  const auto spacer = run({"--format", "machine", "labels", "--spec", data_file("chacon.spec"), "--level", "2",
                           "--offset", "9"});
  EXPECT_TRUE(contains(spacer.out, "label: 1 inf inf"));
  EXPECT_EQ(run({"labels", "--spec", data_file("chacon.spec"), "--level", "2", "--offset", "99"}).code, cli::kUsage);
}

TEST(Cli, ErrorCodes) {
  EXPECT_EQ(run({}).code, cli::kUsage);
  EXPECT_EQ(run({"check-iso", data_file("chacon.spec")}).code, cli::kUsage);
  EXPECT_EQ(run({"validate", "/nonexistent.spec"}).code, cli::kUsage);
  EXPECT_EQ(run({"--format", "json", "validate", data_file("chacon.spec")}).code, cli::kUsage);
  EXPECT_EQ(run({"ergodic", data_file("chacon.spec"), "--d", "1"}).code, cli::kUsage);
  const auto bad = run({"validate", "-"}, "period:\nstage r=3 s=0\n");
  EXPECT_EQ(bad.code, cli::kInvalidSpec);
  EXPECT_TRUE(contains(bad.err, "line 2"));
  EXPECT_EQ(run({"validate", "-"}, "").code, cli::kInvalidSpec);
}

}  // namespace
}  // namespace rank1
