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

#include "bbb/graph.h"

#include <random>

#include <gtest/gtest.h>

#include "bbb/max_flow.h"
#include "bbb/rational.h"
#include "test_util.h"

namespace bbb {
namespace {

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

// Transitive closure by repeated relaxation.
std::vector<std::vector<bool>> Closure(const Digraph& d) {
  const int n = d.num_vertices();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (int v = 0; v < n; ++v) r[v][v] = true;
  for (const Arc& a : d.arcs()) r[a.tail][a.head] = true;
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) r[i][j] = r[i][j] || (r[i][k] && r[k][j]);
    }
  }
  return r;
}

TEST(DigraphTest, RejectsLoopsAndDuplicateIds) {
  Digraph d;
  d.AddVertex("a");
  EXPECT_THROW(d.AddVertex("a"), InputError);
  EXPECT_THROW(d.AddArc(0, 0), InputError);
  EXPECT_THROW(d.AddArc("a", "zz"), InputError);
}

TEST(DigraphTest, ParallelArcsKeepTheirOwnIndex) {
  Digraph d = MakeDigraph(2, {{0, 1}, {0, 1}});
  EXPECT_EQ(d.num_arcs(), 2);
  EXPECT_EQ(d.in_arcs(1), (std::vector<int>{0, 1}));
  Digraph r = d.Reversed();
  EXPECT_EQ(r.arc(1).tail, 1);
  EXPECT_EQ(r.arc(1).head, 0);
}

TEST(DigraphTest, DegreesAndCuts) {
  Digraph d = MakeDigraph(3, {{0, 1}, {1, 2}, {0, 2}, {2, 1}});
  EXPECT_EQ(InDegrees(d, d.AllArcs()), (DegreeVector{0, 2, 2}));
  EXPECT_EQ(OutDegrees(d, d.AllArcs()), (DegreeVector{2, 1, 1}));
  VertexSet x(3, {1, 2});
  EXPECT_EQ(InCutSize(d, d.AllArcs(), x), 2);
  EXPECT_EQ(OutCutSize(d, d.AllArcs(), x), 0);
  EXPECT_EQ(InducedArcs(d, d.AllArcs(), x).Members(), (std::vector<int>{1, 3}));
}

TEST(DigraphTest, InducedSubgraphMapsBack) {
  Digraph d = MakeDigraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 1}});
  SubDigraph sub = InducedSubgraph(d, VertexSet(4, {1, 2, 3}));
  EXPECT_EQ(sub.graph.num_vertices(), 3);
  EXPECT_EQ(sub.parent_arc, (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(sub.sub_vertex[0], -1);
}

TEST(DigraphTest, ReachabilityMatchesClosure) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    Digraph d = RandomDigraph(rng, 6, static_cast<int>(rng() % 10));
    auto closure = Closure(d);
    for (int s = 0; s < 6; ++s) {
      VertexSet r = ReachableFrom(d, d.AllArcs(), VertexSet(6, {s}));
      for (int v = 0; v < 6; ++v) EXPECT_EQ(r.Contains(v), closure[s][v]);
    }
  }
}

TEST(DigraphTest, StrongComponentsMatchMutualReachability) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    Digraph d = RandomDigraph(rng, 6, static_cast<int>(rng() % 12));
    auto closure = Closure(d);
    auto comps = StrongComponents(d);
    std::vector<int> which(6, -1);
    for (size_t c = 0; c < comps.size(); ++c) {
      for (int v : comps[c].vertices.Members()) which[v] = static_cast<int>(c);
    }
    for (int u = 0; u < 6; ++u) {
      ASSERT_GE(which[u], 0);
      for (int v = 0; v < 6; ++v) {
        EXPECT_EQ(which[u] == which[v], closure[u][v] && closure[v][u]);
      }
    }
    for (const StrongComponent& c : comps) {
      bool entered = false;
      for (const Arc& a : d.arcs()) {
        entered = entered ||
                  (!c.vertices.Contains(a.tail) && c.vertices.Contains(a.head));
      }
      EXPECT_EQ(c.is_source, !entered);
    }
  }
}

TEST(MaxFlowTest, MatchesMinimumCutByEnumeration) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 5;
    FlowNetwork<Rational> net(n);
    std::vector<std::tuple<int, int, Rational>> arcs;
    for (int i = 0; i < 9; ++i) {
      int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
      if (u == v) continue;
      Rational c(static_cast<long>(rng() % 7),
                 1 + static_cast<long>(rng() % 3));
      c.canonicalize();
      net.AddArc(u, v, c);
      arcs.emplace_back(u, v, c);
    }
    auto result = net.Solve(0, n - 1);
    ASSERT_FALSE(result.unbounded);
    std::optional<Rational> best;
    for (int mask = 0; mask < (1 << n); ++mask) {
      if (!(mask & 1) || (mask >> (n - 1) & 1)) continue;
      Rational cut = 0;
      for (const auto& [u, v, c] : arcs) {
        if ((mask >> u & 1) && !(mask >> v & 1)) cut += c;
      }
      if (!best || cut < *best) best = cut;
    }
    EXPECT_EQ(result.value, *best);
    EXPECT_EQ(*net.CutCapacity(result.source_side), result.value);
  }
}

TEST(MaxFlowTest, InfinitePathIsUnbounded) {
  FlowNetwork<int64_t> net(3);
  net.AddInfiniteArc(0, 1);
  net.AddInfiniteArc(1, 2);
  EXPECT_TRUE(net.Solve(0, 2).unbounded);
}

TEST(RationalTest, ParsesAndPrintsLowestTerms) {
  EXPECT_EQ(ToString(ParseRational("6/4")), "3/2");
  EXPECT_EQ(ToString(ParseRational("-5")), "-5");
  EXPECT_THROW(ParseRational("1/0"), InputError);
  EXPECT_THROW(ParseRational("x"), InputError);
  EXPECT_TRUE(ExtRational::Infinity() > ExtRational(Rational(1000)));
  EXPECT_EQ(Floor(Rational(-3, 2)), -2);
  EXPECT_EQ(Ceil(Rational(3, 2)), 2);
}

}  // namespace
}  // namespace bbb
