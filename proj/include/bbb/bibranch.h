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

#ifndef BBB_BIBRANCH_H_
#define BBB_BIBRANCH_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bbb/graph.h"
#include "bbb/rational.h"

namespace bbb {

enum class Side { kS, kT };

// A b-bibranching instance: digraph, {S,T} bipartition, capacities b >= 1
// and nonnegative rational arc weights. Validated on construction and
// immutable afterwards. Arcs from T to S are rejected.
class Instance {
 public:
  Instance(Digraph digraph, std::vector<Side> side, DegreeVector b,
           std::vector<Rational> weights);

  const Digraph& digraph() const { return digraph_; }
  const std::vector<Side>& sides() const { return side_; }
  Side side(int v) const { return side_[v]; }
  bool InS(int v) const { return side_[v] == Side::kS; }
  bool InT(int v) const { return side_[v] == Side::kT; }
  const DegreeVector& b() const { return b_; }
  const std::vector<Rational>& weights() const { return w_; }
  const Rational& weight(int a) const { return w_[a]; }

  int num_vertices() const { return digraph_.num_vertices(); }
  int num_arcs() const { return digraph_.num_arcs(); }
  const VertexSet& S() const { return s_set_; }
  const VertexSet& T() const { return t_set_; }

  // A[S,T], the arcs crossing from S to T.
  ArcSet CrossArcs() const;

 private:
  Digraph digraph_;
  std::vector<Side> side_;
  DegreeVector b_;
  std::vector<Rational> w_;
  VertexSet s_set_;
  VertexSet t_set_;
};

Rational WeightOf(const Instance& inst, const ArcSet& arcs);

enum class Condition {
  kTReachableFromS,  // every v in T is reachable from S in (V,B)
  kSReachesT,        // every u in S reaches T in (V,B)
  kTIndegree,        // d^-_B(v) >= b(v) for v in T
  kSOutdegree,       // d^+_B(u) >= b(u) for u in S
};

const char* ConditionName(Condition c);

struct ConditionResult {
  Condition condition;
  bool holds = true;
  // First failing vertex.
  std::optional<int> witness;
};

struct BibranchingReport {
  bool valid = true;
  std::array<ConditionResult, 4> conditions;
};

BibranchingReport CheckBBibranching(const Instance& inst, const ArcSet& arcs);
bool IsBBibranching(const Instance& inst, const ArcSet& arcs);

// The description through B[T] being a b|_T-branching and B[S] a
// b|_S-cobranching, plus both degree conditions. It implies
// IsBBibranching; the converse holds for inclusion-wise minimal sets only.
struct AlternativeReport {
  bool valid = true;
  bool t_side_branching = true;
  bool s_side_cobranching = true;
  bool t_indegree = true;
  bool s_outdegree = true;
};

AlternativeReport CheckAlternativeDescription(const Instance& inst,
                                              const ArcSet& arcs);

// Drops arcs until every remaining arc is needed: highest weight first,
// ties broken toward the highest index. Throws InputError if `arcs` is not
// a b-bibranching.
ArcSet PruneToMinimal(const Instance& inst, const ArcSet& arcs);

struct Solution {
  ArcSet arcs;
  Rational weight;
  BibranchingReport certificate;
};

Solution MakeSolution(const Instance& inst, ArcSet arcs);

// Why no b-bibranching exists: a condition failing for the full arc set.
struct InfeasibilityWitness {
  Condition condition;
  int vertex;
};

// Superset closure makes A itself the test: the instance is feasible iff A
// is a b-bibranching.
std::optional<InfeasibilityWitness> FindInfeasibility(const Instance& inst);

// The four conditions on arc bitmasks, for enumeration loops. Needs
// |V| <= 64 and |A| <= 32.
class MaskValidity {
 public:
  explicit MaskValidity(const Instance& inst);
  bool Valid(uint32_t arcs) const;
  // Valid, and invalid after dropping any single arc.
  bool Minimal(uint32_t arcs) const;

 private:
  const Instance& inst_;
  std::vector<int> tail_, head_;
  uint64_t s_mask_ = 0, t_mask_ = 0;
};

inline constexpr int kDefaultBruteForceArcLimit = 20;

// Exact minimum by enumerating every arc subset. Among equal weights the
// first subset in increasing bitmask order wins. Throws GuardError above
// `max_arcs` arcs. Returns nullopt when infeasible.
std::optional<Solution> BruteForceShortest(
    const Instance& inst, int max_arcs = kDefaultBruteForceArcLimit);

}  // namespace bbb

#endif  // BBB_BIBRANCH_H_
