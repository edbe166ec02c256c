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

#include "bbb/mconvex.h"

#include <random>

#include <gtest/gtest.h>

#include "bbb/generator.h"
#include "bbb/matroid.h"
#include "bbb/mflow.h"
#include "bbb/solve.h"
#include "test_util.h"

namespace bbb {
namespace {

using testing::MakeDigraph;
using testing::MakeInstance;

TEST(OracleTest, BoundaryValues) {
  Digraph d = MakeDigraph(3, {{0, 1}, {1, 2}});
  BBranchingOracle f(d, {1, 1, 2}, {Rational(3), Rational(4)});
  EXPECT_EQ(f.EvalF({1, 1, 2}), ExtRational(Rational(0)));
  // Vertex 0 has no in-arc, so it cannot receive anything.
  EXPECT_TRUE(f.EvalF({0, 1, 2}).is_infinite());
  EXPECT_EQ(f.EvalF({1, 0, 1}), ExtRational(Rational(7)));
  EXPECT_TRUE(f.EvalF({-1, 1, 2}).is_infinite());
  EXPECT_EQ(f.EvalG({5, 5, 5}), ExtRational(Rational(0)));
  EXPECT_EQ(f.EvalG({3, 0, 1}), f.EvalF({1, 0, 1}));
  // Vertex 2 would need two in-arcs.
  EXPECT_TRUE(f.EvalG({1, 0, 0}).is_infinite());
}

TEST(OracleTest, MatchesBruteForceAndClipping) {
  std::mt19937_64 rng(3);
  for (uint64_t seed = 1; seed <= 40; ++seed) {
    CorpusParams p;
    p.max_vertices = 5;
    p.max_arcs = 9;
    Instance inst = GenerateCorpusInstance(seed, p);
    const Digraph& d = inst.digraph();
    BBranchingOracle o(d, inst.b(), inst.weights());
    for (int trial = 0; trial < 30; ++trial) {
      DegreeVector x(d.num_vertices());
      for (int v = 0; v < d.num_vertices(); ++v) {
        x[v] = static_cast<int>(rng() % (inst.b()[v] + 3));
      }
      ExtRational f = o.EvalF(x);
      EXPECT_EQ(f, BruteForceF(d, inst.b(), inst.weights(), x));
      EXPECT_EQ(o.EvalG(x), BruteForceG(d, inst.b(), inst.weights(), x));
      std::optional<ArcSet> arg = o.ArgminF(x);
      EXPECT_EQ(arg.has_value(), f.is_finite());
      if (arg) {
        EXPECT_TRUE(IsBBranching(d, inst.b(), *arg));
        Rational w = 0;
        for (int a : arg->Members()) w += inst.weight(a);
        EXPECT_EQ(ExtRational(w), f);
      }
      // g is nonincreasing.
      DegreeVector up = x;
      up[rng() % up.size()] += 1;
      EXPECT_LE(o.EvalG(up), o.EvalG(x));
    }
  }
}

TEST(OracleTest, SideOraclesUseInducedAndReversedGraphs) {
  Instance inst = MakeInstance(
      {{"s1", 'S', 1}, {"s2", 'S', 1}, {"t", 'T', 1}},
      {{"s1", "s2", 2}, {"s2", "t", 1}, {"s1", "t", 9}});
  BBranchingOracle s =
      BBranchingOracle::ForSide(inst, OracleSide::kSCobranching);
  ASSERT_EQ(s.dimension(), 2);
  EXPECT_EQ(s.parent_arc(), (std::vector<int>{0}));
  // s1 leaves through s1 -> s2 only when s1 gets no cross arc.
  EXPECT_EQ(s.EvalG({0, 1}), ExtRational(Rational(2)));
  EXPECT_TRUE(s.EvalG({1, 0}).is_infinite());
}

TEST(MnatTest, VacuousAndSingleStep) {
  auto f = [](const DegreeVector& x) {
    return ExtRational(Rational(x[0] * x[0] + x[1]));
  };
  long triples = 0;
  EXPECT_FALSE(CheckMnatPair(f, {1, 1}, {1, 1}, &triples).has_value());
  EXPECT_EQ(triples, 0);
  EXPECT_FALSE(CheckMnatPair(f, {2, 1}, {1, 1}, &triples).has_value());
  EXPECT_EQ(triples, 1);
}

TEST(MnatTest, DetectsNonConvexFunction) {
  // Concave in one coordinate: moving toward the middle costs more.
  auto f = [](const DegreeVector& x) {
    return ExtRational(Rational(-x[0] * x[0]));
  };
  std::optional<MnatFailure> fail = CheckMnatPair(f, {2}, {0}, nullptr);
  ASSERT_TRUE(fail.has_value());
  EXPECT_EQ(fail->u, 0);
}

TEST(MnatTest, BranchingFunctionsPassOnSeededInstances) {
  for (uint64_t seed = 1; seed <= 8; ++seed) {
    CorpusParams p;
    p.max_vertices = 5;
    p.max_arcs = 10;
    Instance inst = GenerateCorpusInstance(seed + 70, p);
    BBranchingOracle o(inst.digraph(), inst.b(), inst.weights());
    DegreeVector above = inst.b();
    for (int& u : above) ++u;
    MnatReport rf = CheckMnatExchange(
        [&](const DegreeVector& x) { return o.EvalF(x); }, inst.b(), seed,
        300);
    MnatReport rg = CheckMnatExchange(
        [&](const DegreeVector& x) { return o.EvalG(x); }, above, seed, 300);
    EXPECT_TRUE(rf.passed());
    EXPECT_TRUE(rg.passed());
    EXPECT_GE(rf.triples, 300);
  }
}

TEST(TwoPartitionTest, GivenPartitionQualifies) {
  Digraph d = MakeDigraph(3, {{0, 1}, {1, 2}, {0, 2}, {2, 1}});
  DegreeVector b{1, 1, 1};
  ArcSet b1(4, {0, 1}), b2(4, {2, 3});
  ASSERT_TRUE(IsBBranching(d, b, b1));
  ASSERT_TRUE(IsBBranching(d, b, b2));
  TwoPartitionResult r =
      TwoPartition(d, b, InDegrees(d, b1), InDegrees(d, b2));
  ASSERT_TRUE(r.feasible);
  EXPECT_TRUE(IsBBranching(d, b, r.b1));
  EXPECT_TRUE(IsBBranching(d, b, r.b2));
  EXPECT_EQ(r.b1.Union(r.b2), d.AllArcs());
}

TEST(TwoPartitionTest, FullSourceComponentIsInfeasible) {
  // The 2-cycle is a source component and b1' would fill it.
  Digraph d = MakeDigraph(2, {{1, 0}, {0, 1}});
  DegreeVector b{1, 1};
  TwoPartitionResult r = TwoPartition(d, b, {1, 1}, {0, 0});
  EXPECT_FALSE(r.feasible);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_FALSE(BruteForceTwoPartitionExists(d, b, {1, 1}, {0, 0}));
  EXPECT_THROW(TwoPartition(d, b, {1, 0}, {0, 0}), InputError);
}

TEST(TwoPartitionTest, ConditionIsEquivalentToExistence) {
  std::mt19937_64 rng(5);
  long checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 4;
    std::vector<std::pair<int, int>> arcs;
    const int m = 3 + static_cast<int>(rng() % 5);
    while (static_cast<int>(arcs.size()) < m) {
      int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
      if (u != v) arcs.emplace_back(u, v);
    }
    Digraph d = MakeDigraph(n, arcs);
    DegreeVector b(n);
    for (int& x : b) x = 1 + static_cast<int>(rng() % 2);
    if (!SplitIntoTwoBBranchings(d, b)) continue;
    DegreeVector in = InDegrees(d, d.AllArcs());
    for (uint32_t code = 0; code < 81; ++code) {
      DegreeVector b1(n), b2(n);
      uint32_t c = code;
      bool ok = true;
      for (int v = 0; v < n; ++v, c /= 3) {
        b1[v] = static_cast<int>(c % 3);
        b2[v] = in[v] - b1[v];
        ok = ok && b1[v] <= b[v] && b2[v] >= 0 && b2[v] <= b[v];
      }
      if (!ok) continue;
      EXPECT_EQ(TwoPartition(d, b, b1, b2).feasible,
                BruteForceTwoPartitionExists(d, b, b1, b2));
      ++checked;
    }
  }
  EXPECT_GT(checked, 50);
}

TEST(ExchangeTest, EmptyAgainstSingleArc) {
  Digraph d = MakeDigraph(2, {{0, 1}});
  DegreeVector b{1, 1};
  ExchangeResult r = ExchangeBBranchings(d, b, ArcSet(1), ArcSet(1, {0}), 1);
  EXPECT_EQ(r.which_case, 'a');
  EXPECT_EQ(r.b1.Members(), (std::vector<int>{0}));
  EXPECT_TRUE(r.b2.Empty());
  EXPECT_THROW(ExchangeBBranchings(d, b, ArcSet(1, {0}), ArcSet(1), 1),
               InputError);
}

TEST(ExchangeTest, CaseBFoundOnFourVertices) {
  // Search small configurations until case b shows up, then check the
  // conclusions literally.
  std::mt19937_64 rng(9);
  int case_b = 0;
  for (int trial = 0; trial < 3000 && case_b < 5; ++trial) {
    std::vector<std::pair<int, int>> arcs;
    const int m = 2 + static_cast<int>(rng() % 6);
    while (static_cast<int>(arcs.size()) < m) {
      int u = static_cast<int>(rng() % 4), v = static_cast<int>(rng() % 4);
      if (u != v) arcs.emplace_back(u, v);
    }
    Digraph d = MakeDigraph(4, arcs);
    DegreeVector b(4);
    for (int& x : b) x = 1 + static_cast<int>(rng() % 2);
    ArcSet b1 = ArcSet::FromMask(m, rng()), b2 = ArcSet::FromMask(m, rng());
    if (!IsBBranching(d, b, b1) || !IsBBranching(d, b, b2)) continue;
    DegreeVector d1 = InDegrees(d, b1), d2 = InDegrees(d, b2);
    for (int s = 0; s < 4; ++s) {
      if (d1[s] >= d2[s]) continue;
      ExchangeResult r = ExchangeBBranchings(d, b, b1, b2, s);
      EXPECT_EQ(ExchangeConclusionError(d, b, b1, b2, s, r), "");
      EXPECT_EQ(r.b1.Union(r.b2), b1.Union(b2));
      EXPECT_EQ(r.b1.Intersection(r.b2), b1.Intersection(b2));
      if (r.which_case == 'b') {
        ++case_b;
        ASSERT_TRUE(r.t.has_value());
        EXPECT_LT(d2[*r.t], d1[*r.t]);
      }
    }
  }
  EXPECT_GT(case_b, 0);
}

TEST(MflowTest, SingleArc) {
  Instance inst = MakeInstance({{"s", 'S', 1}, {"t", 'T', 1}}, {{"s", "t", 5}});
  MflowResult r = SolveMflow(inst);
  ASSERT_TRUE(r.solution.has_value());
  EXPECT_EQ(r.flow.Members(), (std::vector<int>{0}));
  EXPECT_EQ(r.objective, 5);
  EXPECT_EQ(MflowObjective(inst, r.flow), ExtRational(Rational(5)));
  EXPECT_TRUE(MflowObjective(inst, ArcSet(1)).is_infinite());
}

TEST(MflowTest, DropsExpensiveCrossArcs) {
  // Starting from all cross arcs, the optimum routes t2 through t1.
  Instance inst = MakeInstance(
      {{"s", 'S', 1}, {"t1", 'T', 1}, {"t2", 'T', 1}},
      {{"s", "t1", 1}, {"s", "t2", 8}, {"t1", "t2", 2}});
  MflowResult r = SolveMflow(inst);
  ASSERT_TRUE(r.solution.has_value());
  EXPECT_EQ(r.objective, 3);
  EXPECT_GE(r.cycles_canceled, 1);
  EXPECT_FALSE(r.stuck);
  EXPECT_EQ(r.flow.Members(), (std::vector<int>{0}));
}

TEST(MflowTest, EdgeCoverOnBipartiteUnitInstances) {
  CorpusParams p;
  p.unit_b = true;
  p.bipartite = true;
  p.max_arcs = 10;
  for (uint64_t seed = 100; seed < 130; ++seed) {
    Instance inst = GenerateCorpusInstance(seed, p);
    std::optional<Rational> cover = testing::MinEdgeCover(inst);
    MflowResult r = SolveMflow(inst);
    ASSERT_EQ(r.solution.has_value(), cover.has_value());
    if (cover) EXPECT_EQ(r.objective, *cover);
  }
}

TEST(MflowTest, GuardOnLargeInstances) {
  GenParams g;
  g.num_s = 5;
  g.num_t = 5;
  EXPECT_THROW(SolveMflow(GenerateInstance(g)), GuardError);
}

}  // namespace
}  // namespace bbb
