// Copyright 2026 The bbb Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <gtest/gtest.h>

#include "bbb/commands.h"
#include "bbb/generator.h"
#include "bbb/instance_io.h"
#include "test_util.h"

namespace bbb {
namespace {

using testing::MakeInstance;

const char kI1[] = R"({"vertices": [{"id": "s", "side": "S", "b": 1},
                                   {"id": "t", "side": "T", "b": 1}],
                      "arcs": [{"tail": "s", "head": "t", "weight": 5}]})";

std::string ErrorOf(const std::string& text) {
  try {
    ParseInstance(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

TEST(InstanceIoTest, ParsesIntegerAndRationalWeights) {
  Instance inst = ParseInstance(R"({"vertices": [
      {"id": "s", "side": "S", "b": 2}, {"id": "t", "side": "T", "b": 1}],
      "arcs": [{"tail": "s", "head": "t", "weight": "3/6"},
               {"tail": "s", "head": "t", "weight": 4}]})");
  EXPECT_EQ(inst.num_arcs(), 2);
  EXPECT_EQ(inst.weight(0), Rational(1, 2));
  EXPECT_EQ(inst.b()[0], 2);
}

TEST(InstanceIoTest, ErrorsPointAtTheField) {
  EXPECT_EQ(ErrorOf("{"), ErrorOf("{")) << "malformed JSON is an InputError";
  EXPECT_NE(ErrorOf("{").find("malformed"), std::string::npos);
  EXPECT_EQ(ErrorOf(R"({"vertices": []})").rfind("/arcs", 0), 0u);
  std::string bad_side = ErrorOf(R"({"vertices": [
      {"id": "s", "side": "X", "b": 1}], "arcs": []})");
  EXPECT_EQ(bad_side.rfind("/vertices/0/side", 0), 0u) << bad_side;
  std::string bad_weight = ErrorOf(R"({"vertices": [
      {"id": "s", "side": "S", "b": 1}, {"id": "t", "side": "T", "b": 1}],
      "arcs": [{"tail": "s", "head": "t", "weight": "-1"}]})");
  EXPECT_EQ(bad_weight.rfind("/arcs/0/weight", 0), 0u) << bad_weight;
  std::string backwards = ErrorOf(R"({"vertices": [
      {"id": "s", "side": "S", "b": 1}, {"id": "t", "side": "T", "b": 1}],
      "arcs": [{"tail": "t", "head": "s", "weight": 1}]})");
  EXPECT_EQ(backwards.rfind("/arcs/0", 0), 0u) << backwards;
  std::string zero_b = ErrorOf(R"({"vertices": [
      {"id": "s", "side": "S", "b": 0}], "arcs": []})");
  EXPECT_EQ(zero_b.rfind("/vertices/0/b", 0), 0u) << zero_b;
  std::string extra = ErrorOf(R"({"vertices": [], "arcs": [], "x": 1})");
  EXPECT_EQ(extra.rfind("/x", 0), 0u) << extra;
}

TEST(InstanceIoTest, RoundTripAndHash) {
  for (uint64_t seed = 1; seed <= 30; ++seed) {
    Instance inst = GenerateCorpusInstance(seed, {});
    std::string text = SerializeInstance(inst);
    Instance back = ParseInstance(text);
    EXPECT_EQ(SerializeInstance(back), text);
    EXPECT_EQ(back.weights(), inst.weights());
    EXPECT_EQ(back.b(), inst.b());
    EXPECT_EQ(back.sides(), inst.sides());
    EXPECT_EQ(InstanceHash(back), InstanceHash(inst));
    EXPECT_EQ(InstanceHash(inst).size(), 16u);
  }
  EXPECT_NE(InstanceHash(GenerateCorpusInstance(1, {})),
            InstanceHash(GenerateCorpusInstance(2, {})));
}

TEST(InstanceIoTest, SolutionFiles) {
  Instance inst = ParseInstance(kI1);
  EXPECT_EQ(SolutionFromJson(inst, Json::parse(R"({"arcs": [0]})")).Size(), 1);
  EXPECT_THROW(SolutionFromJson(inst, Json::parse(R"({"arcs": [1]})")),
               InputError);
  EXPECT_THROW(SolutionFromJson(inst, Json::parse(R"({"arcs": [0, 0]})")),
               InputError);
}

TEST(GeneratorTest, DeterministicAndNeverBackwards) {
  GenParams p;
  p.seed = 42;
  p.num_s = 3;
  p.num_t = 3;
  EXPECT_EQ(SerializeInstance(GenerateInstance(p)),
            SerializeInstance(GenerateInstance(p)));
  Instance inst = GenerateInstance(p);
  for (const Arc& a : inst.digraph().arcs()) {
    EXPECT_FALSE(inst.InT(a.tail) && inst.InS(a.head));
  }
  for (const Rational& w : inst.weights()) {
    EXPECT_GE(w, 0);
    EXPECT_LE(w, p.wmax);
  }
}

TEST(GeneratorTest, DensityExtremes) {
  GenParams p;
  p.num_s = 2;
  p.num_t = 3;
  p.arc_density = 0;
  Instance none = GenerateInstance(p);
  EXPECT_EQ(none.num_arcs(), 0);
  EXPECT_TRUE(FindInfeasibility(none).has_value());
  p.arc_density = 1;
  EXPECT_EQ(GenerateInstance(p).num_arcs(), EligiblePairs(2, 3));
  // 2 S-S pairs, 6 T-T pairs, 6 cross pairs.
  EXPECT_EQ(EligiblePairs(2, 3), 14);
  p.num_s = 0;
  EXPECT_THROW(GenerateInstance(p), InputError);
}

TEST(GeneratorTest, ArcCountsMatchDensity) {
  // Each count is Binomial(N, p); the mean over many seeds must sit within
  // six standard deviations of N p.
  GenParams p;
  p.num_s = 3;
  p.num_t = 4;
  p.arc_density = 0.3;
  const int runs = 400;
  const double n = static_cast<double>(EligiblePairs(3, 4));
  double total = 0;
  for (int seed = 1; seed <= runs; ++seed) {
    p.seed = seed;
    total += GenerateInstance(p).num_arcs();
  }
  const double mean = total / runs;
  const double sd = std::sqrt(n * 0.3 * 0.7 / runs);
  EXPECT_LE(std::fabs(mean - n * 0.3), 6 * sd);
}

CommandResult Wrap(const std::function<CommandResult()>& body) {
  return Execute(Json::object(), body);
}

TEST(CommandsTest, ValidateSingleArc) {
  Instance inst = ParseInstance(kI1);
  CommandResult ok = Wrap([&] { return RunValidate(inst, ArcSet(1, {0})); });
  EXPECT_EQ(ok.exit_code, kExitOk);
  EXPECT_EQ(ok.report["status"], "valid");
  for (const Json& c : ok.report["result"]["conditions"]) {
    EXPECT_TRUE(c["holds"].get<bool>());
  }
  CommandResult empty = Wrap([&] { return RunValidate(inst, ArcSet(1)); });
  EXPECT_EQ(empty.report["status"], "invalid");
  int failed = 0;
  for (const Json& c : empty.report["result"]["conditions"]) {
    failed += !c["holds"].get<bool>();
    EXPECT_FALSE(c["witness"].is_null());
  }
  EXPECT_EQ(failed, 4);
}

TEST(CommandsTest, SolveAndInfeasible) {
  Instance inst = ParseInstance(kI1);
  CommandResult r = Wrap([&] { return RunSolve(inst, Method::kAuto); });
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_EQ(r.report["result"]["value"], "5");
  EXPECT_EQ(r.report["result"]["agreement"].size(), 3u);
  Instance bad = MakeInstance({{"s", 'S', 1}, {"t", 'T', 1}}, {});
  CommandResult inf = Wrap([&] { return RunSolve(bad, Method::kLp); });
  EXPECT_EQ(inf.exit_code, kExitInfeasible);
  EXPECT_EQ(inf.report["result"]["witness"]["vertex"].get<std::string>().size(),
            1u);
}

TEST(CommandsTest, BruteGuardExitsFour) {
  GenParams p;
  p.num_s = 3;
  p.num_t = 3;
  p.arc_density = 1;
  Instance inst = GenerateInstance(p);
  CommandResult r = Wrap([&] { return RunSolve(inst, Method::kBrute); });
  EXPECT_EQ(r.exit_code, kExitGuard);
  EXPECT_EQ(r.report["status"], "guard_exceeded");
}

TEST(CommandsTest, PackSingleAndDoubled) {
  Instance one = ParseInstance(kI1);
  CommandResult r = Wrap([&] { return RunPack(one); });
  EXPECT_EQ(r.report["result"]["k"], 1);
  EXPECT_EQ(r.report["result"]["witness"]["t_min"], 1);
  EXPECT_EQ(r.report["result"]["witness"]["bicut_min"], 1);
  Instance two = MakeInstance({{"s", 'S', 1}, {"t", 'T', 1}},
                              {{"s", "t", 5}, {"s", "t", 5}});
  CommandResult d = Wrap([&] { return RunPack(two); });
  EXPECT_EQ(d.report["result"]["k"], 2);
  EXPECT_EQ(d.report["result"]["bibranchings"],
            Json::parse("[[0], [1]]"));
  EXPECT_EQ(Wrap([&] { return RunPackingNumber(two); }).report["result"]["k"],
            2);
}

TEST(CommandsTest, ChecksOnSingleArc) {
  Instance inst = ParseInstance(kI1);
  CommandResult tdi =
      Wrap([&] { return RunCheck(inst, CheckKind::kTdi, 1, 0); });
  EXPECT_EQ(tdi.exit_code, kExitOk);
  const Json& y = tdi.report["result"]["unboxed"]["dual_y"];
  ASSERT_EQ(y.size(), 1u);
  EXPECT_EQ(y[0]["set"], Json::parse(R"(["t"])"));
  EXPECT_EQ(y[0]["y"], "5");
  for (CheckKind kind :
       {CheckKind::kMconvex, CheckKind::kExchange, CheckKind::kIdp}) {
    CommandResult r = Wrap([&] { return RunCheck(inst, kind, 1, 100); });
    EXPECT_EQ(r.exit_code, kExitOk) << CheckKindName(kind);
  }
  EXPECT_THROW(ParseCheckKind("nope"), InputError);
}

TEST(CommandsTest, CorpusChecksPass) {
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    CorpusParams p;
    p.max_vertices = 5;
    p.max_arcs = 10;
    Instance inst = GenerateCorpusInstance(seed + 123, p);
    for (CheckKind kind : {CheckKind::kTdi, CheckKind::kMconvex,
                           CheckKind::kExchange, CheckKind::kIdp}) {
      if (kind == CheckKind::kTdi && FindInfeasibility(inst)) continue;
      CommandResult r = Wrap([&] { return RunCheck(inst, kind, seed, 30); });
      EXPECT_EQ(r.exit_code, kExitOk)
          << seed << " " << CheckKindName(kind) << " "
          << RenderReport(r.report);
    }
  }
}

TEST(CommandsTest, ErrorsMapToExitCodes) {
  Json echo;
  echo["name"] = "x";
  CommandResult input = Execute(echo, []() -> CommandResult {
    throw InputError("bad");
  });
  EXPECT_EQ(input.exit_code, kExitInputError);
  EXPECT_EQ(input.report.begin().key(), "command");
  EXPECT_EQ(input.report["exit_code"], kExitInputError);
  EXPECT_EQ(Execute(echo, []() -> CommandResult {
              throw TheoremViolation("bad");
            }).exit_code,
            kExitTheoremViolation);
}

// End to end through the binary.

struct Process {
  int exit_code;
  std::string out;
};

Process RunCli(const std::string& args) {
  std::string cmd = std::string(BBB_CLI_PATH) + " " + args + " 2>/dev/null";
  Process p{-1, ""};
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return p;
  char buffer[4096];
  size_t n;
  while ((n = fread(buffer, 1, sizeof(buffer), pipe)) > 0)
    p.out.append(buffer, n);
  int status = pclose(pipe);
  p.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return p;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("bbb_cli_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::string Write(const std::string& name, const std::string& text) {
    std::string path = (dir_ / name).string();
    std::ofstream(path) << text;
    return path;
  }
  std::filesystem::path dir_;
};

TEST_F(CliTest, SolveIsByteIdenticalAcrossRuns) {
  std::string inst = Write("i1.json", kI1);
  Process a = RunCli("solve " + inst + " --method auto");
  Process b = RunCli("solve " + inst + " --method auto");
  EXPECT_EQ(a.exit_code, 0);
  EXPECT_EQ(a.out, b.out);
  Json report = Json::parse(a.out);
  EXPECT_EQ(report["result"]["value"], "5");
  EXPECT_EQ(report["command"]["name"], "solve");
}

TEST_F(CliTest, ExitCodes) {
  std::string bad = Write("bad.json", R"({"vertices": 3, "arcs": []})");
  EXPECT_EQ(RunCli("solve " + bad).exit_code, kExitInputError);
  std::string inf = Write("inf.json", R"({"vertices": [
      {"id": "s", "side": "S", "b": 1}, {"id": "t", "side": "T", "b": 1}],
      "arcs": []})");
  Process p = RunCli("solve " + inf + " --method lp");
  EXPECT_EQ(p.exit_code, kExitInfeasible);
  EXPECT_NE(p.out.find("\"witness\""), std::string::npos);
  EXPECT_EQ(RunCli("gen --nS 0").exit_code, kExitInputError);
  EXPECT_EQ(RunCli("solve").exit_code, kExitInputError);
  EXPECT_EQ(RunCli("check " + inf + " --what nope").exit_code,
            kExitInputError);
}

TEST_F(CliTest, GenValidateAndDumpLp) {
  Process g1 = RunCli("gen --seed 9 --nS 2 --nT 3 --arc-density 0.6 --bmax 2");
  Process g2 = RunCli("gen --seed 9 --nS 2 --nT 3 --arc-density 0.6 --bmax 2");
  EXPECT_EQ(g1.exit_code, 0);
  EXPECT_EQ(g1.out, g2.out);
  std::string inst = Write("i1.json", kI1);
  std::string sol = Write("sol.json", R"({"arcs": [0]})");
  Process v = RunCli("validate " + inst + " " + sol);
  EXPECT_EQ(v.exit_code, 0);
  EXPECT_EQ(Json::parse(v.out)["result"]["valid"], true);
  std::string lp = (dir_ / "final.lp").string();
  EXPECT_EQ(RunCli("solve " + inst + " --method lp --dump-lp " + lp).exit_code,
            0);
  std::ifstream in(lp);
  std::string first;
  std::getline(in, first);
  EXPECT_FALSE(first.empty());
}

}  // namespace
}  // namespace bbb
