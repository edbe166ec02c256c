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

#include "bbb/matroid.h"

#include <random>

#include <gtest/gtest.h>

#include "test_util.h"

namespace bbb {
namespace {

using testing::DefinitionalBBranching;
using testing::MakeDigraph;

Digraph RandomDigraph(std::mt19937_64& rng, int n, int m) {
  Digraph d;
  for (int v = 0; v < n; ++v) d.AddVertex("v" + std::to_string(v));
  while (d.num_arcs() < m) {
    int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
    if (u != v) d.AddArc(u, v);
  }
  return d;
}

DegreeVector RandomCapacity(std::mt19937_64& rng, int n, int bmax) {
  DegreeVector b(n);
  for (int& x : b) x = 1 + static_cast<int>(rng() % bmax);
  return b;
}

TEST(MatroidTest, UnitCapacityMeansBranching) {
  // b = 1: indegree <= 1 and no cycle.
  Digraph d = MakeDigraph(3, {{0, 1}, {1, 2}, {2, 0}, {0, 2}});
  DegreeVector one(3, 1);
  EXPECT_TRUE(IsBBranching(d, one, ArcSet(4, {0, 1})));
  EXPECT_FALSE(IsBBranching(d, one, ArcSet(4, {0, 1, 2})));
  EXPECT_FALSE(IsBBranching(d, one, ArcSet(4, {1, 3})));
}

TEST(MatroidTest, CapacityTwoAllowsOneCycle) {
  Digraph d = MakeDigraph(2, {{0, 1}, {1, 0}, {0, 1}});
  EXPECT_TRUE(IsBBranching(d, {2, 1}, ArcSet(3, {0, 1})));
  EXPECT_FALSE(IsBBranching(d, {1, 1}, ArcSet(3, {0, 1})));
  // Indegrees fit, but |B[V]| = 3 > b(V) - 1 = 2.
  EXPECT_FALSE(IsBBranching(d, {1, 2}, ArcSet(3, {0, 1, 2})));
  EXPECT_TRUE(IsBBranching(d, {2, 2}, ArcSet(3, {0, 1, 2})));
}

TEST(MatroidTest, SparsityCheckMatchesDefinition) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    Digraph d = RandomDigraph(rng, n, static_cast<int>(rng() % 9));
    DegreeVector b = RandomCapacity(rng, n, 3);
    ArcSet arcs = ArcSet::FromMask(d.num_arcs(), rng());
    EXPECT_EQ(IsBBranching(d, b, arcs), DefinitionalBBranching(d, b, arcs));
    SparsityReport r = SparsityMatroid(d, b).Check(arcs);
    if (!r.independent) {
      int inside = InducedArcs(d, arcs, r.witness).Size();
      int cap = 0;
      for (int v : r.witness.Members()) cap += b[v];
      EXPECT_GT(inside, cap - 1);
    }
  }
}

TEST(MatroidTest, CanAddAgreesWithIndependence) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    Digraph d = RandomDigraph(rng, n, 1 + static_cast<int>(rng() % 8));
    DegreeVector b = RandomCapacity(rng, n, 2);
    SparsityMatroid m(d, b);
    ArcSet arcs = d.NoArcs();
    for (int a = 0; a < d.num_arcs(); ++a) {
      ArcSet bigger = arcs;
      bigger.Insert(a);
      EXPECT_EQ(m.CanAdd(arcs, a), m.Independent(bigger));
      if (m.CanAdd(arcs, a) && rng() % 2) arcs = bigger;
    }
  }
}

TEST(MatroidTest, ExactIndegreeOptimumMatchesEnumeration) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    Digraph d = RandomDigraph(rng, n, static_cast<int>(rng() % 9));
    DegreeVector b = RandomCapacity(rng, n, 2);
    std::vector<Rational> w;
    for (int a = 0; a < d.num_arcs(); ++a) w.push_back(rng() % 10);
    DegreeVector t(n);
    for (int v = 0; v < n; ++v) t[v] = static_cast<int>(rng() % (b[v] + 1));
    std::optional<Rational> best;
    for (uint32_t mask = 0; mask < (uint32_t{1} << d.num_arcs()); ++mask) {
      ArcSet arcs = ArcSet::FromMask(d.num_arcs(), mask);
      if (InDegrees(d, arcs) != t || !DefinitionalBBranching(d, b, arcs)) {
        continue;
      }
      Rational total = 0;
      for (int a : arcs.Members()) total += w[a];
      if (!best || total < *best) best = total;
    }
    IntersectionResult r = MinWeightBBranchingExactIndegrees(d, b, w, t);
    ASSERT_EQ(r.feasible, best.has_value());
    if (best) {
      EXPECT_EQ(r.weight, *best);
      EXPECT_EQ(InDegrees(d, r.arcs), t);
      EXPECT_TRUE(DefinitionalBBranching(d, b, r.arcs));
    }
  }
}

TEST(MatroidTest, RejectsBadCapacities) {
  Digraph d = MakeDigraph(2, {{0, 1}});
  EXPECT_THROW(CheckCapacities(d, {1, 0}), InputError);
  EXPECT_THROW(CheckCapacities(d, {1}), InputError);
  std::vector<Rational> w{1};
  EXPECT_THROW(MinWeightBBranchingExactIndegrees(d, {1, 1}, w, {0, 2}),
               InputError);
}

}  // namespace
}  // namespace bbb
