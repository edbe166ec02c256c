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

#include "bbb/packing.h"

#include <random>

#include <gtest/gtest.h>

#include "bbb/generator.h"
#include "bbb/prescribed_packing.h"
#include "test_util.h"

namespace bbb {
namespace {

using testing::MakeDigraph;
using testing::MakeInstance;

TEST(PackingTest, SingleArc) {
  Instance inst = MakeInstance({{"s", 'S', 1}, {"t", 'T', 1}}, {{"s", "t", 5}});
  MinMaxWitness w = PackingNumber(inst);
  EXPECT_EQ(w.k, 1);
  EXPECT_EQ(w.t_min, 1);
  EXPECT_EQ(w.s_min, 1);
  EXPECT_EQ(w.bicut_min, 1);
  PackingCertificate cert = PackBBibranchings(inst);
  EXPECT_TRUE(cert.verified);
  EXPECT_EQ(cert.bibranchings.size(), 1u);
}

TEST(PackingTest, DoubledArcPacksTwo) {
  Instance inst = MakeInstance({{"s", 'S', 1}, {"t", 'T', 1}},
                               {{"s", "t", 1}, {"s", "t", 2}});
  PackingCertificate cert = PackBBibranchings(inst);
  ASSERT_EQ(cert.k, 2);
  ASSERT_TRUE(cert.verified);
  EXPECT_EQ(cert.bibranchings[0].Size(), 1);
  EXPECT_EQ(cert.bibranchings[1].Size(), 1);
  EXPECT_TRUE(VerifyPacking(inst, cert.bibranchings));
}

TEST(PackingTest, InfeasibleInstanceHasZero) {
  Instance inst = MakeInstance({{"s", 'S', 1}, {"t", 'T', 1}}, {});
  EXPECT_EQ(PackingNumber(inst).k, 0);
  EXPECT_EQ(ExhaustivePackingNumber(inst), 0);
}

TEST(PackingTest, MinMaxMatchesExhaustiveSearch) {
  for (uint64_t seed = 1; seed <= 60; ++seed) {
    CorpusParams p;
    p.max_vertices = 5;
    p.max_arcs = 12;
    p.unit_b = seed % 3 == 0;
    Instance inst = GenerateCorpusInstance(seed + 900, p);
    MinMaxWitness w = PackingNumber(inst);
    int exact = ExhaustivePackingNumber(inst);
    EXPECT_EQ(w.k, exact) << seed;
    PackingCertificate cert = PackBBibranchings(inst);
    EXPECT_TRUE(cert.verified);
    EXPECT_EQ(static_cast<int>(cert.bibranchings.size()), exact);
    // Weak direction, checked against each witness separately.
    EXPECT_LE(exact, w.t_min);
    EXPECT_LE(exact, w.s_min);
    EXPECT_LE(exact, w.bicut_min);
  }
}

TEST(PackingTest, ClaimsHoldOnCorpus) {
  for (uint64_t seed = 1; seed <= 40; ++seed) {
    CorpusParams p;
    p.max_vertices = 5;
    p.unit_b = seed % 2 == 0;
    Instance inst = GenerateCorpusInstance(seed + 1900, p);
    if (PackingNumber(inst).k < 1) continue;
    ClaimReport r = CheckPackingClaims(inst);
    EXPECT_TRUE(r.passed()) << seed << " "
                            << (r.details.empty() ? "" : r.details[0]);
  }
}

TEST(PackingTest, CutFamilyRejectsForeignCut) {
  Instance inst = MakeInstance({{"s", 'S', 1}, {"t", 'T', 1}}, {{"s", "t", 5}});
  CutFamilyOracle family(inst, FamilySide::kT, 1);
  ASSERT_EQ(family.members().size(), 1u);
  EXPECT_EQ(family.GValue(inst.digraph().AllArcs()), 1);
  EXPECT_THROW(family.GValue(inst.digraph().NoArcs()), InputError);
}

TEST(DecompositionTest, UnitScaleIsTheVectorItself) {
  Instance inst = MakeInstance({{"s", 'S', 1}, {"t", 'T', 1}},
                               {{"s", "t", 1}, {"s", "t", 1}});
  DecompositionResult r = IntegerDecompositionCheck(inst, 1, {1, 0});
  ASSERT_TRUE(r.verified);
  EXPECT_EQ(r.parts[0].Members(), (std::vector<int>{0}));
  EXPECT_FALSE(IntegerDecompositionCheck(inst, 1, {0, 0}).precondition_ok);
}

TEST(DecompositionTest, ScaledIndicatorGivesIdenticalCopies) {
  Instance inst = MakeInstance(
      {{"s", 'S', 1}, {"t1", 'T', 1}, {"t2", 'T', 1}},
      {{"s", "t1", 1}, {"t1", "t2", 1}, {"s", "t2", 1}});
  DecompositionResult r = IntegerDecompositionCheck(inst, 3, {3, 3, 0});
  ASSERT_TRUE(r.verified);
  for (const ArcSet& part : r.parts) {
    EXPECT_EQ(part.Members(), (std::vector<int>{0, 1}));
  }
}

TEST(DecompositionTest, RandomScaledVerticesDecompose) {
  std::mt19937_64 rng(31);
  int done = 0;
  for (uint64_t seed = 1; seed <= 30; ++seed) {
    CorpusParams p;
    p.max_vertices = 5;
    p.max_arcs = 10;
    Instance inst = GenerateCorpusInstance(seed + 2900, p);
    if (FindInfeasibility(inst)) continue;
    for (int k = 2; k <= 3; ++k) {
      std::vector<Rational> w;
      for (int a = 0; a < inst.num_arcs(); ++a) {
        w.push_back(static_cast<long>(rng() % 19) - 9);
      }
      std::optional<std::vector<int>> x = ScaledPolytopeVertex(inst, k, w);
      ASSERT_TRUE(x.has_value());
      DecompositionResult r = IntegerDecompositionCheck(inst, k, *x);
      ASSERT_TRUE(r.precondition_ok);
      EXPECT_TRUE(r.verified) << seed;
      ++done;
    }
  }
  EXPECT_GT(done, 20);
}

TEST(PrescribedPackingTest, UnitCapacityIsEdmondsBranchingPacking) {
  std::mt19937_64 rng(41);
  int feasible = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 2);
    std::vector<std::pair<int, int>> arcs;
    const int m = 3 + static_cast<int>(rng() % 6);
    while (static_cast<int>(arcs.size()) < m) {
      int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
      if (u != v) arcs.emplace_back(u, v);
    }
    Digraph d = MakeDigraph(n, arcs);
    std::vector<VertexSet> roots;
    std::vector<DegreeVector> pres;
    for (int j = 0; j < 2; ++j) {
      VertexSet r(n, {static_cast<int>(rng() % n)});
      DegreeVector bj(n);
      for (int v = 0; v < n; ++v) bj[v] = r.Contains(v) ? 0 : 1;
      roots.push_back(r);
      pres.push_back(bj);
    }
    PrescribedPackingResult r =
        PackPrescribedBBranchings(d, DegreeVector(n, 1), pres);
    bool exists = testing::DisjointBranchingsExist(d, roots);
    EXPECT_EQ(r.feasible, exists);
    EXPECT_EQ(r.conditions.holds(), testing::EdmondsCondition(d, roots));
    if (!r.feasible) continue;
    ++feasible;
    EXPECT_FALSE(r.branchings[0].Intersects(r.branchings[1]));
    for (int j = 0; j < 2; ++j) {
      EXPECT_EQ(InDegrees(d, r.branchings[j]), pres[j]);
      EXPECT_TRUE(
          testing::DefinitionalBBranching(d, DegreeVector(n, 1),
                                          r.branchings[j]));
    }
  }
  EXPECT_GT(feasible, 5);
}

TEST(PrescribedPackingTest, RejectsFullPrescription) {
  Digraph d = MakeDigraph(2, {{0, 1}});
  EXPECT_THROW(PackPrescribedBBranchings(d, {1, 1}, {{1, 1}}), InputError);
  EXPECT_THROW(PackPrescribedBBranchings(d, {1, 1}, {{0, 2}}), InputError);
}

}  // namespace
}  // namespace bbb
