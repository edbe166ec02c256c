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

#include "bbb/bibranch.h"

#include <algorithm>
#include <cstdint>

#include "bbb/matroid.h"

namespace bbb {

Instance::Instance(Digraph digraph, std::vector<Side> side, DegreeVector b,
                   std::vector<Rational> weights)
    : digraph_(std::move(digraph)),
      side_(std::move(side)),
      b_(std::move(b)),
      w_(std::move(weights)) {
  const int n = digraph_.num_vertices();
  if (static_cast<int>(side_.size()) != n) {
    throw InputError("bipartition size does not match the digraph");
  }
  CheckCapacities(digraph_, b_);
  if (static_cast<int>(w_.size()) != digraph_.num_arcs()) {
    throw InputError("weight vector size does not match the digraph");
  }
  s_set_ = VertexSet(n);
  t_set_ = VertexSet(n);
  for (int v = 0; v < n; ++v) {
    (side_[v] == Side::kS ? s_set_ : t_set_).Insert(v);
  }
  if (s_set_.Empty() || t_set_.Empty()) {
    throw InputError("both S and T must be nonempty");
  }
  for (int a = 0; a < digraph_.num_arcs(); ++a) {
    const Arc& arc = digraph_.arc(a);
    if (InT(arc.tail) && InS(arc.head)) {
      throw InputError("arc " + std::to_string(a) + " goes from T to S");
    }
    if (w_[a] < 0) {
      throw InputError("arc " + std::to_string(a) + " has negative weight");
    }
  }
}

ArcSet Instance::CrossArcs() const {
  return ArcsBetween(digraph_, digraph_.AllArcs(), s_set_, t_set_);
}

Rational WeightOf(const Instance& inst, const ArcSet& arcs) {
  CheckArcSet(inst.digraph(), arcs);
  Rational total = 0;
  for (int a : arcs.Members()) total += inst.weight(a);
  return total;
}

const char* ConditionName(Condition c) {
  switch (c) {
    case Condition::kTReachableFromS:
      return "t_reachable_from_s";
    case Condition::kSReachesT:
      return "s_reaches_t";
    case Condition::kTIndegree:
      return "t_indegree";
    case Condition::kSOutdegree:
      return "s_outdegree";
  }
  return "?";
}

namespace {

// Vertices from which X is reachable in (V,B).
VertexSet ReachingTo(const Digraph& d, const ArcSet& b, const VertexSet& x) {
  VertexSet seen = x;
  std::vector<int> stack = x.Members();
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int a : d.in_arcs(v)) {
      if (!b.Contains(a)) continue;
      int t = d.arc(a).tail;
      if (!seen.Contains(t)) {
        seen.Insert(t);
        stack.push_back(t);
      }
    }
  }
  return seen;
}

}  // namespace

BibranchingReport CheckBBibranching(const Instance& inst, const ArcSet& arcs) {
  const Digraph& d = inst.digraph();
  CheckArcSet(d, arcs);
  BibranchingReport report;
  const Condition order[] = {Condition::kTReachableFromS, Condition::kSReachesT,
                             Condition::kTIndegree, Condition::kSOutdegree};
  for (int i = 0; i < 4; ++i) report.conditions[i].condition = order[i];
  VertexSet from_s = ReachableFrom(d, arcs, inst.S());
  VertexSet to_t = ReachingTo(d, arcs, inst.T());
  DegreeVector in = InDegrees(d, arcs);
  DegreeVector out = OutDegrees(d, arcs);
  auto fail = [&](int index, int v) {
    ConditionResult& c = report.conditions[index];
    if (c.holds) {
      c.holds = false;
      c.witness = v;
    }
    report.valid = false;
  };
  for (int v = 0; v < inst.num_vertices(); ++v) {
    if (inst.InT(v)) {
      if (!from_s.Contains(v)) fail(0, v);
      if (in[v] < inst.b()[v]) fail(2, v);
    } else {
      if (!to_t.Contains(v)) fail(1, v);
      if (out[v] < inst.b()[v]) fail(3, v);
    }
  }
  return report;
}

bool IsBBibranching(const Instance& inst, const ArcSet& arcs) {
  return CheckBBibranching(inst, arcs).valid;
}

namespace {

// Restricts `arcs` to D[X] and tests the b|_X-branching property, on the
// reversed subgraph when `reversed`.
bool SideIsBBranching(const Instance& inst, const ArcSet& arcs,
                      const VertexSet& x, bool reversed) {
  SubDigraph sub = InducedSubgraph(inst.digraph(), x);
  Digraph g = reversed ? sub.graph.Reversed() : sub.graph;
  DegreeVector b;
  for (int v : sub.parent_vertex) b.push_back(inst.b()[v]);
  ArcSet local = g.NoArcs();
  for (int a = 0; a < g.num_arcs(); ++a) {
    if (arcs.Contains(sub.parent_arc[a])) local.Insert(a);
  }
  return IsBBranching(g, b, local);
}

}  // namespace

AlternativeReport CheckAlternativeDescription(const Instance& inst,
                                              const ArcSet& arcs) {
  CheckArcSet(inst.digraph(), arcs);
  AlternativeReport report;
  report.t_side_branching = SideIsBBranching(inst, arcs, inst.T(), false);
  report.s_side_cobranching = SideIsBBranching(inst, arcs, inst.S(), true);
  DegreeVector in = InDegrees(inst.digraph(), arcs);
  DegreeVector out = OutDegrees(inst.digraph(), arcs);
  for (int v = 0; v < inst.num_vertices(); ++v) {
    if (inst.InT(v) && in[v] < inst.b()[v]) report.t_indegree = false;
    if (inst.InS(v) && out[v] < inst.b()[v]) report.s_outdegree = false;
  }
  report.valid = report.t_side_branching && report.s_side_cobranching &&
                 report.t_indegree && report.s_outdegree;
  return report;
}

ArcSet PruneToMinimal(const Instance& inst, const ArcSet& arcs) {
  if (!IsBBibranching(inst, arcs)) {
    throw InputError("cannot prune: arc set is not a b-bibranching");
  }
  ArcSet current = arcs;
  while (true) {
    int chosen = -1;
    for (int a : current.Members()) {
      if (chosen >= 0 && inst.weight(a) < inst.weight(chosen)) continue;
      current.Erase(a);
      bool removable = IsBBibranching(inst, current);
      current.Insert(a);
      if (removable) chosen = a;
    }
    if (chosen < 0) return current;
    current.Erase(chosen);
  }
}

Solution MakeSolution(const Instance& inst, ArcSet arcs) {
  Solution s;
  s.weight = WeightOf(inst, arcs);
  s.certificate = CheckBBibranching(inst, arcs);
  s.arcs = std::move(arcs);
  return s;
}

std::optional<InfeasibilityWitness> FindInfeasibility(const Instance& inst) {
  BibranchingReport report =
      CheckBBibranching(inst, inst.digraph().AllArcs());
  for (const ConditionResult& c : report.conditions) {
    if (!c.holds) return InfeasibilityWitness{c.condition, *c.witness};
  }
  return std::nullopt;
}

MaskValidity::MaskValidity(const Instance& inst) : inst_(inst) {
  if (inst.num_vertices() > 64 || inst.num_arcs() > 32) {
    throw GuardError("bitmask checks need |V| <= 64 and |A| <= 32");
  }
  for (const Arc& a : inst.digraph().arcs()) {
    tail_.push_back(a.tail);
    head_.push_back(a.head);
  }
  s_mask_ = inst.S().Mask();
  t_mask_ = inst.T().Mask();
}

bool MaskValidity::Valid(uint32_t arcs) const {
  const int n = inst_.num_vertices();
  const int m = inst_.num_arcs();
  int in[64] = {0}, out[64] = {0};
  for (int a = 0; a < m; ++a) {
    if (arcs >> a & 1) {
      ++in[head_[a]];
      ++out[tail_[a]];
    }
  }
  for (int v = 0; v < n; ++v) {
    int deg = inst_.InT(v) ? in[v] : out[v];
    if (deg < inst_.b()[v]) return false;
  }
  uint64_t forward = s_mask_, backward = t_mask_;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < m; ++a) {
      if (!(arcs >> a & 1)) continue;
      if ((forward >> tail_[a] & 1) && !(forward >> head_[a] & 1)) {
        forward |= uint64_t{1} << head_[a];
        changed = true;
      }
      if ((backward >> head_[a] & 1) && !(backward >> tail_[a] & 1)) {
        backward |= uint64_t{1} << tail_[a];
        changed = true;
      }
    }
  }
  return (forward & t_mask_) == t_mask_ && (backward & s_mask_) == s_mask_;
}

bool MaskValidity::Minimal(uint32_t arcs) const {
  if (!Valid(arcs)) return false;
  for (int a = 0; a < inst_.num_arcs(); ++a) {
    if ((arcs >> a & 1) && Valid(arcs & ~(uint32_t{1} << a))) return false;
  }
  return true;
}

std::optional<Solution> BruteForceShortest(const Instance& inst,
                                           int max_arcs) {
  const int m = inst.num_arcs();
  if (m > max_arcs || m > 30 || inst.num_vertices() > 64) {
    throw GuardError("brute force refuses " + std::to_string(m) +
                     " arcs (limit " + std::to_string(std::min(max_arcs, 30)) +
                     ")");
  }
  if (FindInfeasibility(inst)) return std::nullopt;
  MaskValidity checker(inst);
  std::optional<uint32_t> best;
  Rational best_weight;
  const uint32_t limit = uint32_t{1} << m;
  for (uint32_t mask = 0; mask < limit; ++mask) {
    Rational w = 0;
    for (int a = 0; a < m; ++a) {
      if (mask >> a & 1) w += inst.weight(a);
    }
    if (best && w >= best_weight) continue;
    if (!checker.Valid(mask)) continue;
    best = mask;
    best_weight = w;
  }
  ArcSet arcs = ArcSet::FromMask(m, *best);
  return MakeSolution(inst, std::move(arcs));
}

}  // namespace bbb
