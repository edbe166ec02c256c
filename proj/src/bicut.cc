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

#include "bbb/bicut.h"

#include "bbb/max_flow.h"

namespace bbb {

bool IsBicutSet(const Instance& inst, const VertexSet& u) {
  if (u.Empty() || u.Size() == inst.num_vertices()) return false;
  return u.IsSubsetOf(inst.T()) || inst.T().IsSubsetOf(u);
}

std::vector<VertexSet> EnumerateBicutSets(const Instance& inst) {
  const int n = inst.num_vertices();
  if (n > 20) throw GuardError("bicut enumeration needs |V| <= 20");
  std::vector<VertexSet> out;
  for (uint64_t mask = 1; mask + 1 < (uint64_t{1} << n); ++mask) {
    VertexSet u = VertexSet::FromMask(n, mask);
    if (IsBicutSet(inst, u)) out.push_back(std::move(u));
  }
  return out;
}

Bicut MakeBicut(const Instance& inst, const VertexSet& u,
                const std::vector<Rational>& x) {
  Bicut cut{u, InCut(inst.digraph(), inst.digraph().AllArcs(), u), 0};
  for (int a : cut.arcs.Members()) cut.value += x[a];
  return cut;
}

namespace {

// One min cut with `forced` pinned to the given side. Returns the sink-side
// vertex set.
VertexSet ForcedCut(const Instance& inst, const std::vector<Rational>& x,
                    int forced, bool forced_in_u) {
  const Digraph& d = inst.digraph();
  const int n = d.num_vertices();
  FlowNetwork<Rational> net(n + 2);
  const int source = n, sink = n + 1;
  for (int a = 0; a < d.num_arcs(); ++a) {
    net.AddArc(d.arc(a).tail, d.arc(a).head, x[a]);
  }
  if (forced_in_u) {
    for (int s : inst.S().Members()) net.AddInfiniteArc(source, s);
    net.AddInfiniteArc(forced, sink);
  } else {
    net.AddInfiniteArc(source, forced);
    for (int t : inst.T().Members()) net.AddInfiniteArc(t, sink);
  }
  auto result = net.Solve(source, sink);
  VertexSet u(n);
  for (int v = 0; v < n; ++v) u.Set(v, !result.source_side[v]);
  return u;
}

}  // namespace

Bicut MinBicut(const Instance& inst, const std::vector<Rational>& x) {
  if (static_cast<int>(x.size()) != inst.num_arcs()) {
    throw InputError("point has wrong dimension");
  }
  for (const Rational& xa : x) {
    if (xa < 0) throw InputError("bicut separation needs x >= 0");
  }
  std::optional<Bicut> best;
  auto consider = [&](const VertexSet& u) {
    Bicut cut = MakeBicut(inst, u, x);
    if (!best || cut.value < best->value) best = std::move(cut);
  };
  for (int t : inst.T().Members()) consider(ForcedCut(inst, x, t, true));
  for (int s : inst.S().Members()) consider(ForcedCut(inst, x, s, false));
  return *best;
}

std::optional<Bicut> SeparateBicut(const Instance& inst,
                                   const std::vector<Rational>& x) {
  Bicut cut = MinBicut(inst, x);
  if (cut.value < 1) return cut;
  return std::nullopt;
}

}  // namespace bbb
