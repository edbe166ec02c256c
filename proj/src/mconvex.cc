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

#include <algorithm>
#include <random>

#include "bbb/matroid.h"
#include "bbb/prescribed_packing.h"

namespace bbb {

BBranchingOracle::BBranchingOracle(Digraph d, DegreeVector b,
                                   std::vector<Rational> weights)
    : graph_(std::move(d)), b_(std::move(b)), w_(std::move(weights)) {
  CheckCapacities(graph_, b_);
  if (static_cast<int>(w_.size()) != graph_.num_arcs()) {
    throw InputError("weight vector size does not match the digraph");
  }
  for (int v = 0; v < graph_.num_vertices(); ++v) parent_vertex_.push_back(v);
  for (int a = 0; a < graph_.num_arcs(); ++a) parent_arc_.push_back(a);
}

BBranchingOracle BBranchingOracle::ForSide(const Instance& inst,
                                           OracleSide side) {
  const bool t_side = side == OracleSide::kTBranching;
  SubDigraph sub =
      InducedSubgraph(inst.digraph(), t_side ? inst.T() : inst.S());
  DegreeVector b;
  for (int v : sub.parent_vertex) b.push_back(inst.b()[v]);
  std::vector<Rational> w;
  for (int a : sub.parent_arc) w.push_back(inst.weight(a));
  BBranchingOracle oracle(t_side ? sub.graph : sub.graph.Reversed(), b, w);
  oracle.parent_vertex_ = sub.parent_vertex;
  oracle.parent_arc_ = sub.parent_arc;
  return oracle;
}

const BBranchingOracle::Entry& BBranchingOracle::Lookup(
    const DegreeVector& x) {
  if (static_cast<int>(x.size()) != dimension()) {
    throw InputError("degree vector has wrong dimension");
  }
  auto it = memo_.find(x);
  if (it != memo_.end()) return it->second;
  Entry entry;
  DegreeVector t(dimension());
  bool in_box = true;
  for (int v = 0; v < dimension(); ++v) {
    t[v] = b_[v] - x[v];
    in_box = in_box && x[v] >= 0 && t[v] >= 0;
  }
  if (in_box) {
    ++calls_;
    IntersectionResult r =
        MinWeightBBranchingExactIndegrees(graph_, b_, w_, t);
    if (r.feasible) {
      entry.value = r.weight;
      entry.arcs = r.arcs;
    }
  }
  return memo_.emplace(x, std::move(entry)).first->second;
}

DegreeVector BBranchingOracle::Clip(const DegreeVector& x) const {
  DegreeVector c(x.size());
  for (size_t v = 0; v < x.size(); ++v) c[v] = std::min(x[v], b_[v]);
  return c;
}

ExtRational BBranchingOracle::EvalF(const DegreeVector& x) {
  return Lookup(x).value;
}

std::optional<ArcSet> BBranchingOracle::ArgminF(const DegreeVector& x) {
  return Lookup(x).arcs;
}

ExtRational BBranchingOracle::EvalG(const DegreeVector& x) {
  return Lookup(Clip(x)).value;
}

std::optional<ArcSet> BBranchingOracle::ArgminG(const DegreeVector& x) {
  return Lookup(Clip(x)).arcs;
}

namespace {

ExtRational BruteForceBranching(const Digraph& d, const DegreeVector& b,
                                const std::vector<Rational>& w,
                                const DegreeVector& x, bool exact) {
  const int m = d.num_arcs();
  if (m > 20) throw GuardError("brute force needs |A| <= 20");
  for (int v : x) {
    if (v < 0) return ExtRational::Infinity();
  }
  ExtRational best;
  for (uint32_t mask = 0; mask < (uint32_t{1} << m); ++mask) {
    DegreeVector in(d.num_vertices(), 0);
    for (int a = 0; a < m; ++a) {
      if (mask >> a & 1) ++in[d.arc(a).head];
    }
    bool ok = true;
    for (int v = 0; v < d.num_vertices() && ok; ++v) {
      ok = exact ? in[v] + x[v] == b[v] : in[v] + x[v] >= b[v];
    }
    if (!ok) continue;
    ArcSet arcs = ArcSet::FromMask(m, mask);
    if (!IsBBranching(d, b, arcs)) continue;
    Rational total = 0;
    for (int a : arcs.Members()) total += w[a];
    if (ExtRational(total) < best) best = total;
  }
  return best;
}

}  // namespace

ExtRational BruteForceF(const Digraph& d, const DegreeVector& b,
                        const std::vector<Rational>& w, const DegreeVector& x) {
  return BruteForceBranching(d, b, w, x, true);
}

ExtRational BruteForceG(const Digraph& d, const DegreeVector& b,
                        const std::vector<Rational>& w, const DegreeVector& x) {
  return BruteForceBranching(d, b, w, x, false);
}

std::optional<MnatFailure> CheckMnatPair(const Evaluator& f,
                                         const DegreeVector& x,
                                         const DegreeVector& y,
                                         long* triples) {
  const ExtRational base = f(x) + f(y);
  if (base.is_infinite()) throw InputError("exchange check needs x, y in dom");
  const int n = static_cast<int>(x.size());
  for (int u = 0; u < n; ++u) {
    if (x[u] <= y[u]) continue;
    if (triples) ++*triples;
    DegreeVector xu = x, yu = y;
    --xu[u];
    ++yu[u];
    if (f(xu) + f(yu) <= base) continue;
    bool found = false;
    for (int v = 0; v < n && !found; ++v) {
      if (x[v] >= y[v]) continue;
      DegreeVector xv = xu, yv = yu;
      ++xv[v];
      --yv[v];
      found = f(xv) + f(yv) <= base;
    }
    if (!found) return MnatFailure{x, y, u};
  }
  return std::nullopt;
}

MnatReport CheckMnatExchange(const Evaluator& f, const DegreeVector& upper,
                             uint64_t seed, long trials) {
  MnatReport report;
  std::mt19937_64 rng(seed);
  const int n = static_cast<int>(upper.size());
  // Collect domain points first; the box is small at desk scale.
  std::vector<DegreeVector> dom;
  DegreeVector x(n, 0);
  while (true) {
    if (f(x).is_finite()) dom.push_back(x);
    int i = 0;
    while (i < n && x[i] == upper[i]) x[i++] = 0;
    if (i == n) break;
    ++x[i];
  }
  if (dom.empty()) return report;
  std::uniform_int_distribution<size_t> pick(0, dom.size() - 1);
  long idle = 0;
  while (report.triples < trials && idle < 100 * trials) {
    const DegreeVector& a = dom[pick(rng)];
    const DegreeVector& b = dom[pick(rng)];
    long before = report.triples;
    ++report.pairs;
    report.failure = CheckMnatPair(f, a, b, &report.triples);
    if (report.failure) break;
    idle = report.triples == before ? idle + 1 : 0;
  }
  return report;
}

namespace {

constexpr long kSplitNodeLimit = 2000000;

class SplitSearch {
 public:
  SplitSearch(const Digraph& d, const DegreeVector& b)
      : d_(d), partition_(d, b), sparsity_(d, b) {
    sides_[0] = d.NoArcs();
    sides_[1] = d.NoArcs();
  }

  std::optional<std::pair<ArcSet, ArcSet>> Run() {
    if (Assign(0)) return std::make_pair(sides_[0], sides_[1]);
    return std::nullopt;
  }

 private:
  bool Assign(int a) {
    if (a == d_.num_arcs()) return true;
    if (++nodes_ > kSplitNodeLimit) {
      throw GuardError("split search exceeded node limit");
    }
    for (int i = 0; i < (a == 0 ? 1 : 2); ++i) {
      if (!partition_.CanAdd(sides_[i], a) || !sparsity_.CanAdd(sides_[i], a)) {
        continue;
      }
      sides_[i].Insert(a);
      if (Assign(a + 1)) return true;
      sides_[i].Erase(a);
    }
    return false;
  }

  const Digraph& d_;
  PartitionMatroid partition_;
  SparsityMatroid sparsity_;
  ArcSet sides_[2];
  long nodes_ = 0;
};

int SumOver(const DegreeVector& x, const VertexSet& s) {
  int total = 0;
  for (int v : s.Members()) total += x[v];
  return total;
}

}  // namespace

std::optional<std::pair<ArcSet, ArcSet>> SplitIntoTwoBBranchings(
    const Digraph& d, const DegreeVector& b) {
  CheckCapacities(d, b);
  if (d.num_arcs() == 0) return std::make_pair(d.NoArcs(), d.NoArcs());
  return SplitSearch(d, b).Run();
}

bool BruteForceTwoPartitionExists(const Digraph& d, const DegreeVector& b,
                                  const DegreeVector& b1,
                                  const DegreeVector& b2) {
  const int m = d.num_arcs();
  if (m > 20) throw GuardError("brute force needs |A| <= 20");
  for (uint32_t mask = 0; mask < (uint32_t{1} << m); ++mask) {
    ArcSet one = ArcSet::FromMask(m, mask);
    ArcSet two = one.Complement();
    if (InDegrees(d, one) != b1 || InDegrees(d, two) != b2) continue;
    if (IsBBranching(d, b, one) && IsBBranching(d, b, two)) return true;
  }
  return false;
}

TwoPartitionResult TwoPartition(const Digraph& d, const DegreeVector& b,
                                const DegreeVector& b1, const DegreeVector& b2,
                                const std::vector<int>* copy_group) {
  CheckCapacities(d, b);
  const int n = d.num_vertices();
  if (static_cast<int>(b1.size()) != n || static_cast<int>(b2.size()) != n) {
    throw InputError("prescriptions have wrong dimension");
  }
  DegreeVector in = InDegrees(d, d.AllArcs());
  for (int v = 0; v < n; ++v) {
    if (b1[v] + b2[v] != in[v]) {
      throw InputError("b1' + b2' differs from d^-_A at " + d.vertex_id(v));
    }
    if (b1[v] < 0 || b2[v] < 0 || b1[v] > b[v] || b2[v] > b[v]) {
      throw InputError("prescription outside [0, b] at " + d.vertex_id(v));
    }
  }
  if (!SplitIntoTwoBBranchings(d, b)) {
    throw InputError("A does not split into two b-branchings");
  }
  TwoPartitionResult result;
  for (const StrongComponent& c : StrongComponents(d)) {
    if (!c.is_source) continue;
    int cap = SumOver(b, c.vertices);
    if (SumOver(b1, c.vertices) >= cap || SumOver(b2, c.vertices) >= cap) {
      result.witness = c.vertices;
      return result;
    }
  }
  PrescribedPackingResult packed =
      PackPrescribedBBranchings(d, b, {b1, b2}, copy_group);
  if (!packed.feasible) return result;
  result.feasible = true;
  result.b1 = packed.branchings[0];
  result.b2 = packed.branchings[1];
  return result;
}

std::string ExchangeConclusionError(const Digraph& d, const DegreeVector& b,
                                    const ArcSet& b1, const ArcSet& b2, int s,
                                    const ExchangeResult& r) {
  if (!IsBBranching(d, b, r.b1) || !IsBBranching(d, b, r.b2)) {
    return "an output is not a b-branching";
  }
  if (r.b1.Union(r.b2) != b1.Union(b2)) return "union changed";
  if (r.b1.Intersection(r.b2) != b1.Intersection(b2)) {
    return "intersection changed";
  }
  DegreeVector d1 = InDegrees(d, b1), d2 = InDegrees(d, b2);
  DegreeVector e1 = d1, e2 = d2;
  ++e1[s];
  --e2[s];
  if (r.which_case == 'b') {
    if (!r.t || *r.t == s) return "case b without a valid t";
    if (!(d2[*r.t] < d1[*r.t])) return "t does not satisfy d_B2(t) < d_B1(t)";
    --e1[*r.t];
    ++e2[*r.t];
  }
  if (InDegrees(d, r.b1) != e1 || InDegrees(d, r.b2) != e2) {
    return "degree vectors do not move as claimed";
  }
  return "";
}

ExchangeResult ExchangeBBranchings(const Digraph& d, const DegreeVector& b,
                                   const ArcSet& b1, const ArcSet& b2, int s) {
  CheckCapacities(d, b);
  CheckArcSet(d, b1);
  CheckArcSet(d, b2);
  if (s < 0 || s >= d.num_vertices()) throw InputError("s out of range");
  if (!IsBBranching(d, b, b1) || !IsBBranching(d, b, b2)) {
    throw InputError("exchange needs two b-branchings");
  }
  DegreeVector d1 = InDegrees(d, b1), d2 = InDegrees(d, b2);
  if (!(d1[s] < d2[s])) throw InputError("exchange needs d_B1(s) < d_B2(s)");

  // Multigraph B1 + B2; a shared arc contributes two copies of one group.
  Digraph multi;
  for (int v = 0; v < d.num_vertices(); ++v) multi.AddVertex(d.vertex_id(v));
  std::vector<int> group;
  for (const ArcSet* part : {&b1, &b2}) {
    for (int a : part->Members()) {
      multi.AddArc(d.arc(a).tail, d.arc(a).head);
      group.push_back(a);
    }
  }
  ExchangeResult result;
  DegreeVector t1 = d1, t2 = d2;
  ++t1[s];
  --t2[s];
  for (const StrongComponent& c : StrongComponents(multi)) {
    if (!c.vertices.Contains(s)) continue;
    if (c.is_source && SumOver(d1, c.vertices) == SumOver(b, c.vertices) - 1) {
      for (int v : c.vertices.Members()) {
        if (v != s && d2[v] < b[v] && d1[v] == b[v]) {
          result.t = v;
          break;
        }
      }
      if (!result.t) throw TheoremViolation("case b without a candidate t");
      result.which_case = 'b';
      --t1[*result.t];
      ++t2[*result.t];
    }
  }
  TwoPartitionResult split = TwoPartition(multi, b, t1, t2, &group);
  if (!split.feasible) {
    throw TheoremViolation("exchange step found no two-partition");
  }
  result.b1 = d.NoArcs();
  result.b2 = d.NoArcs();
  for (int c : split.b1.Members()) result.b1.Insert(group[c]);
  for (int c : split.b2.Members()) result.b2.Insert(group[c]);
  std::string error = ExchangeConclusionError(d, b, b1, b2, s, result);
  if (!error.empty()) throw TheoremViolation("exchange output: " + error);
  return result;
}

}  // namespace bbb
