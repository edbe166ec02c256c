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

#include "test_util.h"

#include <functional>

namespace bbb::testing {

Instance MakeInstance(const std::vector<VertexSpec>& vertices,
                      const std::vector<ArcSpec>& arcs) {
  Digraph d;
  std::vector<Side> side;
  DegreeVector b;
  for (const VertexSpec& v : vertices) {
    d.AddVertex(v.id);
    side.push_back(v.side == 'S' ? Side::kS : Side::kT);
    b.push_back(v.b);
  }
  std::vector<Rational> w;
  for (const ArcSpec& a : arcs) {
    d.AddArc(a.tail, a.head);
    w.push_back(Rational(a.weight));
  }
  return Instance(std::move(d), std::move(side), std::move(b), std::move(w));
}

Digraph MakeDigraph(int n, const std::vector<std::pair<int, int>>& arcs) {
  Digraph d;
  for (int v = 0; v < n; ++v) d.AddVertex("v" + std::to_string(v));
  for (const auto& [u, v] : arcs) d.AddArc(u, v);
  return d;
}

bool DefinitionalBBranching(const Digraph& d, const DegreeVector& b,
                            const ArcSet& arcs) {
  const int n = d.num_vertices();
  DegreeVector in = InDegrees(d, arcs);
  for (int v = 0; v < n; ++v) {
    if (in[v] > b[v]) return false;
  }
  for (uint32_t x = 1; x < (uint32_t{1} << n); ++x) {
    int inside = 0, cap = 0;
    for (int v = 0; v < n; ++v) {
      if (x >> v & 1) cap += b[v];
    }
    for (int a : arcs.Members()) {
      if ((x >> d.arc(a).tail & 1) && (x >> d.arc(a).head & 1)) ++inside;
    }
    if (inside > cap - 1) return false;
  }
  return true;
}

std::optional<Rational> MinEdgeCover(const Instance& inst) {
  const Digraph& d = inst.digraph();
  const int m = d.num_arcs();
  std::optional<Rational> best;
  for (uint32_t mask = 0; mask < (uint32_t{1} << m); ++mask) {
    std::vector<bool> covered(d.num_vertices(), false);
    Rational w = 0;
    for (int a = 0; a < m; ++a) {
      if (!(mask >> a & 1)) continue;
      covered[d.arc(a).tail] = covered[d.arc(a).head] = true;
      w += inst.weight(a);
    }
    bool all = true;
    for (bool c : covered) all = all && c;
    if (all && (!best || w < *best)) best = w;
  }
  return best;
}

std::optional<Rational> ShortestArborescence(const Instance& inst) {
  const Digraph& d = inst.digraph();
  const int n = d.num_vertices();
  int root = -1;
  for (int v = 0; v < n; ++v) {
    if (inst.InS(v)) root = v;
  }
  std::vector<int> parent(n, -1);
  std::optional<Rational> best;
  std::function<void(int, Rational)> choose = [&](int v, Rational w) {
    if (v == n) {
      // Every vertex must climb to the root.
      for (int u = 0; u < n; ++u) {
        int x = u, steps = 0;
        while (x != root && steps <= n) {
          x = d.arc(parent[x]).tail;
          ++steps;
        }
        if (x != root) return;
      }
      if (!best || w < *best) best = w;
      return;
    }
    if (v == root) {
      choose(v + 1, w);
      return;
    }
    for (int a : d.in_arcs(v)) {
      parent[v] = a;
      choose(v + 1, w + inst.weight(a));
    }
  };
  choose(0, Rational(0));
  return best;
}

bool DisjointBranchingsExist(const Digraph& d,
                             const std::vector<VertexSet>& roots) {
  const int n = d.num_vertices();
  const int k = static_cast<int>(roots.size());
  std::vector<bool> used(d.num_arcs(), false);
  std::vector<std::vector<int>> parent(k, std::vector<int>(n, -1));
  auto acyclic = [&](int j) {
    for (int u = 0; u < n; ++u) {
      int x = u, steps = 0;
      while (parent[j][x] >= 0 && steps <= n) {
        x = d.arc(parent[j][x]).tail;
        ++steps;
      }
      if (steps > n) return false;
    }
    return true;
  };
  std::function<bool(int, int)> choose = [&](int j, int v) -> bool {
    if (j == k) return true;
    if (v == n) return acyclic(j) && choose(j + 1, 0);
    if (roots[j].Contains(v)) return choose(j, v + 1);
    for (int a : d.in_arcs(v)) {
      if (used[a]) continue;
      used[a] = true;
      parent[j][v] = a;
      if (choose(j, v + 1)) return true;
      used[a] = false;
      parent[j][v] = -1;
    }
    return false;
  };
  return choose(0, 0);
}

bool EdmondsCondition(const Digraph& d, const std::vector<VertexSet>& roots) {
  const int n = d.num_vertices();
  // X = V is vacuous: every root set meets it.
  for (uint32_t x = 1; x + 1 < (uint32_t{1} << n); ++x) {
    VertexSet set = VertexSet::FromMask(n, x);
    int missing = 0;
    for (const VertexSet& r : roots) missing += !set.Intersects(r);
    if (InCutSize(d, d.AllArcs(), set) < missing) return false;
  }
  return true;
}

}  // namespace bbb::testing
