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

#include <cstdint>
#include <numeric>
#include <utility>

#include "bbb/max_flow.h"

namespace bbb {

void CheckCapacities(const Digraph& d, const DegreeVector& b) {
  if (static_cast<int>(b.size()) != d.num_vertices()) {
    throw InputError("capacity vector size does not match the digraph");
  }
  for (int v = 0; v < d.num_vertices(); ++v) {
    if (b[v] < 1) {
      throw InputError("capacity of \"" + d.vertex_id(v) + "\" must be >= 1");
    }
  }
}

PartitionMatroid::PartitionMatroid(const Digraph& d, DegreeVector capacity)
    : d_(&d), capacity_(std::move(capacity)) {
  if (static_cast<int>(capacity_.size()) != d.num_vertices()) {
    throw InputError("partition capacity size does not match the digraph");
  }
}

std::optional<int> PartitionMatroid::Violation(const ArcSet& b) const {
  DegreeVector deg = InDegrees(*d_, b);
  for (int v = 0; v < d_->num_vertices(); ++v) {
    if (deg[v] > capacity_[v]) return v;
  }
  return std::nullopt;
}

bool PartitionMatroid::Independent(const ArcSet& b) const {
  return !Violation(b).has_value();
}

bool PartitionMatroid::CanAdd(const ArcSet& indep, int a) const {
  int h = d_->arc(a).head;
  int deg = 0;
  for (int e : d_->in_arcs(h)) deg += indep.Contains(e);
  return deg < capacity_[h];
}

bool PartitionMatroid::CanExchange(const ArcSet& indep, int out,
                                   int in) const {
  int h = d_->arc(in).head;
  int deg = 0;
  for (int e : d_->in_arcs(h)) deg += indep.Contains(e) && e != out;
  return deg < capacity_[h];
}

SparsityMatroid::SparsityMatroid(const Digraph& d, DegreeVector b)
    : d_(&d), b_(std::move(b)) {
  CheckCapacities(d, b_);
}

std::pair<int, VertexSet> SparsityMatroid::MaxExcess(
    const ArcSet& arcs, const std::vector<int>& forced) const {
  // Project selection: picking an arc node earns 1 and forces both endpoint
  // nodes, picking a vertex costs b(v).
  const int n = d_->num_vertices();
  std::vector<int> members = arcs.Members();
  FlowNetwork<int64_t> net(n + static_cast<int>(members.size()) + 2);
  const int source = n + static_cast<int>(members.size());
  const int sink = source + 1;
  for (int v = 0; v < n; ++v) net.AddArc(v, sink, b_[v]);
  for (size_t i = 0; i < members.size(); ++i) {
    int node = n + static_cast<int>(i);
    const Arc& arc = d_->arc(members[i]);
    net.AddArc(source, node, 1);
    net.AddInfiniteArc(node, arc.tail);
    net.AddInfiniteArc(node, arc.head);
  }
  for (int v : forced) net.AddInfiniteArc(source, v);
  auto result = net.Solve(source, sink);
  VertexSet x(n);
  for (int v = 0; v < n; ++v) {
    if (result.source_side[v]) x.Insert(v);
  }
  int excess =
      static_cast<int>(members.size()) - static_cast<int>(result.value);
  return {excess, std::move(x)};
}

SparsityReport SparsityMatroid::Check(const ArcSet& arcs) const {
  CheckArcSet(*d_, arcs);
  SparsityReport report;
  bool first = true;
  for (int v = 0; v < d_->num_vertices(); ++v) {
    auto [excess, x] = MaxExcess(arcs, {v});
    int slack = -excess;
    if (first || slack < report.slack) {
      report.slack = slack;
      report.witness = std::move(x);
      first = false;
    }
  }
  report.independent = first || report.slack > 0;
  return report;
}

bool SparsityMatroid::CanAdd(const ArcSet& indep, int a) const {
  ArcSet grown = indep;
  grown.Insert(a);
  const Arc& arc = d_->arc(a);
  // Only sets containing both endpoints of the new arc can become tight.
  return MaxExcess(grown, {arc.tail, arc.head}).first < 0;
}

bool SparsityMatroid::CanExchange(const ArcSet& indep, int out,
                                  int in) const {
  ArcSet swapped = indep;
  swapped.Erase(out);
  return CanAdd(swapped, in);
}

bool IsBBranching(const Digraph& d, const DegreeVector& b,
                  const ArcSet& arcs) {
  return PartitionMatroid(d, b).Independent(arcs) &&
         SparsityMatroid(d, b).Independent(arcs);
}

namespace {

struct PathLabel {
  bool reached = false;
  Rational length;
  int hops = 0;
  int parent = -1;

  bool Improves(const Rational& len, int h) const {
    if (!reached) return true;
    int c = cmp(len, length);
    return c < 0 || (c == 0 && h < hops);
  }
};

}  // namespace

IntersectionResult WeightedMatroidIntersection(
    const PartitionMatroid& m1, const SparsityMatroid& m2,
    const std::vector<Rational>& weights, int target, Sense sense) {
  const Digraph& d = m1.digraph();
  const int m = d.num_arcs();
  if (static_cast<int>(weights.size()) != m) {
    throw InputError("weight vector size does not match the digraph");
  }
  if (target < 0) throw InputError("target size must be nonnegative");

  std::vector<Rational> cost(weights);
  if (sense == Sense::kMax) {
    for (auto& c : cost) c = -c;
  }

  IntersectionResult result;
  ArcSet current = d.NoArcs();
  for (int step = 0; step < target; ++step) {
    std::vector<bool> in_m1(m, false), in_m2(m, false);
    for (int z = 0; z < m; ++z) {
      if (current.Contains(z)) continue;
      in_m1[z] = m1.CanAdd(current, z);
      in_m2[z] = m2.CanAdd(current, z);
    }

    // Exchange graph. y in I, z not in I:
    //   y -> z  when I - y + z is independent in m1,
    //   z -> y  when I - y + z is independent in m2.
    std::vector<std::vector<int>> adj(m);
    std::vector<int> inside = current.Members();
    for (int z = 0; z < m; ++z) {
      if (current.Contains(z)) continue;
      for (int y : inside) {
        if (in_m1[z] || m1.CanExchange(current, y, z)) adj[y].push_back(z);
        if (in_m2[z] || m2.CanExchange(current, y, z)) adj[z].push_back(y);
      }
    }

    // Vertex-weighted shortest path from X1 to X2, fewest arcs among
    // shortest. No negative cycles while `current` is extreme.
    std::vector<Rational> node_len(m);
    for (int e = 0; e < m; ++e) {
      node_len[e] = current.Contains(e) ? Rational(-cost[e]) : cost[e];
    }
    std::vector<PathLabel> label(m);
    for (int z = 0; z < m; ++z) {
      if (in_m1[z]) {
        label[z].reached = true;
        label[z].length = node_len[z];
      }
    }
    for (int round = 0; round < m; ++round) {
      bool changed = false;
      for (int u = 0; u < m; ++u) {
        if (!label[u].reached) continue;
        for (int v : adj[u]) {
          Rational len = label[u].length + node_len[v];
          int hops = label[u].hops + 1;
          if (label[v].Improves(len, hops)) {
            label[v].reached = true;
            label[v].length = len;
            label[v].hops = hops;
            label[v].parent = u;
            changed = true;
          }
        }
      }
      if (!changed) break;
    }
    int best = -1;
    for (int z = 0; z < m; ++z) {
      if (!in_m2[z] || !label[z].reached) continue;
      if (best < 0 || label[best].Improves(label[z].length, label[z].hops)) {
        best = z;
      }
    }
    if (best < 0) {
      result.reached = step;
      return result;
    }
    for (int e = best; e >= 0; e = label[e].parent) {
      current.Set(e, !current.Contains(e));
    }
  }

  result.feasible = true;
  result.reached = target;
  result.weight = 0;
  for (int e : current.Members()) result.weight += weights[e];
  result.arcs = std::move(current);
  return result;
}

IntersectionResult MinWeightBBranchingExactIndegrees(
    const Digraph& d, const DegreeVector& b,
    const std::vector<Rational>& weights, const DegreeVector& t) {
  CheckCapacities(d, b);
  if (static_cast<int>(t.size()) != d.num_vertices()) {
    throw InputError("indegree prescription size does not match the digraph");
  }
  for (int v = 0; v < d.num_vertices(); ++v) {
    if (t[v] < 0 || t[v] > b[v]) {
      throw InputError("indegree prescription must lie in [0, b(v)]");
    }
  }
  PartitionMatroid m1(d, t);
  SparsityMatroid m2(d, b);
  int target = std::accumulate(t.begin(), t.end(), 0);
  return WeightedMatroidIntersection(m1, m2, weights, target, Sense::kMin);
}

}  // namespace bbb
