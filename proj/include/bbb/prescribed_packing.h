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

#ifndef BBB_PRESCRIBED_PACKING_H_
#define BBB_PRESCRIBED_PACKING_H_

#include <optional>
#include <vector>

#include "bbb/graph.h"

namespace bbb {

inline constexpr int kPackingVertexLimit = 16;
inline constexpr long kPackingNodeLimit = 2000000;

struct PackingConditions {
  bool degree_ok = true;
  std::optional<int> degree_witness;  // v with d^-_A(v) < sum_j b_j(v)
  bool cut_ok = true;
  std::optional<VertexSet> cut_witness;  // X with d^-_A(X) too small
  bool holds() const { return degree_ok && cut_ok; }
};

// The two conditions for disjoint b-branchings B_j with d^-_{B_j} = b_j:
// d^-_A(v) >= sum_j b_j(v), and d^-_A(X) >= #{j : b_j(X) = b(X) != 0} for
// every nonempty X. The cut side enumerates all X (|V| <= 16).
PackingConditions CheckPackingConditions(
    const Digraph& d, const ArcSet& arcs, const DegreeVector& b,
    const std::vector<DegreeVector>& prescriptions);

struct PrescribedPackingResult {
  bool feasible = false;
  std::vector<ArcSet> branchings;
  PackingConditions conditions;
  long nodes = 0;
};

// Disjoint b-branchings with exact indegrees b_j, or infeasible with the
// failing condition. Needs 0 <= b_j <= b and b_j != b (InputError).
// Arcs sharing a value in `copy_group` (when given) never land in the same
// branching; the conditions are then necessary only, and search decides.
// The search chooses in-arc sets vertex by vertex, class by class, and
// prunes with sparsity and with the conditions on what is left.
PrescribedPackingResult PackPrescribedBBranchings(
    const Digraph& d, const DegreeVector& b,
    const std::vector<DegreeVector>& prescriptions,
    const std::vector<int>* copy_group = nullptr);

}  // namespace bbb

#endif  // BBB_PRESCRIBED_PACKING_H_
