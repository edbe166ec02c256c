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

#ifndef BBB_MATROID_H_
#define BBB_MATROID_H_

#include <optional>
#include <vector>

#include "bbb/graph.h"
#include "bbb/rational.h"

namespace bbb {

// Indegree-bounded arc sets: d^-_B(v) <= capacity(v) for all v.
class PartitionMatroid {
 public:
  PartitionMatroid(const Digraph& d, DegreeVector capacity);

  const Digraph& digraph() const { return *d_; }
  const DegreeVector& capacity() const { return capacity_; }

  bool Independent(const ArcSet& b) const;
  // First vertex whose indegree exceeds its capacity.
  std::optional<int> Violation(const ArcSet& b) const;
  // Precondition: `indep` independent and a not in it.
  bool CanAdd(const ArcSet& indep, int a) const;
  // Is indep - out + in independent? Precondition as CanAdd, out in indep.
  bool CanExchange(const ArcSet& indep, int out, int in) const;

 private:
  const Digraph* d_;
  DegreeVector capacity_;
};

struct SparsityReport {
  bool independent = true;
  // A nonempty X minimizing b(X) - |B[X]|, and that minimum. X violates the
  // bound iff slack <= 0.
  VertexSet witness;
  int slack = 0;
};

// Count matroid: |B[X]| <= b(X) - 1 for every nonempty X.
class SparsityMatroid {
 public:
  SparsityMatroid(const Digraph& d, DegreeVector b);

  const Digraph& digraph() const { return *d_; }
  const DegreeVector& capacity() const { return b_; }

  SparsityReport Check(const ArcSet& arcs) const;
  bool Independent(const ArcSet& arcs) const { return Check(arcs).independent; }
  bool CanAdd(const ArcSet& indep, int a) const;
  bool CanExchange(const ArcSet& indep, int out, int in) const;

 private:
  // max over X containing `forced` of |B[X]| - b(X), with a maximizing X.
  std::pair<int, VertexSet> MaxExcess(const ArcSet& arcs,
                                      const std::vector<int>& forced) const;

  const Digraph* d_;
  DegreeVector b_;
};

// B is a b-branching: indegree and sparsity conditions both hold.
bool IsBBranching(const Digraph& d, const DegreeVector& b, const ArcSet& arcs);

enum class Sense { kMin, kMax };

struct IntersectionResult {
  bool feasible = false;
  ArcSet arcs;
  Rational weight;
  // Largest common independent set size reached before stopping.
  int reached = 0;
};

// Common independent set of size exactly `target` with optimal total
// weight, by shortest augmenting paths in the exchange graph. Infeasible
// when the maximum common independent set is smaller than `target`.
// `weights` is indexed by arc.
IntersectionResult WeightedMatroidIntersection(
    const PartitionMatroid& m1, const SparsityMatroid& m2,
    const std::vector<Rational>& weights, int target, Sense sense);

// Minimum-weight b-branching with d^-_B = t exactly. Requires 0 <= t <= b
// (InputError otherwise). Infeasible is a regular answer.
IntersectionResult MinWeightBBranchingExactIndegrees(
    const Digraph& d, const DegreeVector& b,
    const std::vector<Rational>& weights, const DegreeVector& t);

// b(v) >= 1 everywhere and sized to d. Throws InputError otherwise.
void CheckCapacities(const Digraph& d, const DegreeVector& b);

}  // namespace bbb

#endif  // BBB_MATROID_H_
