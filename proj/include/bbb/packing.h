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

#ifndef BBB_PACKING_H_
#define BBB_PACKING_H_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bbb/bibranch.h"
#include "bbb/simplex.h"

namespace bbb {

inline constexpr int kFamilySideLimit = 12;
inline constexpr int kExhaustiveArcLimit = 20;

struct MinMaxWitness {
  int t_min = 0;
  int t_argmin = -1;
  int s_min = 0;
  int s_argmin = -1;
  int bicut_min = 0;
  VertexSet bicut_u;
  int k = 0;
};

// The three-term minimum bounding the number of disjoint b-bibranchings.
MinMaxWitness PackingNumber(const Instance& inst);

// The two cut families over H = A[S,T]: side 1 holds delta^-_H(U) for
// nonempty U inside T, side 2 holds delta^+_H(U) for nonempty U inside S.
enum class FamilySide { kT = 1, kS = 2 };

// Set function on the vertex side, e.g. U -> d^-_{A[T]}(U).
using SideFunction = std::function<int(const VertexSet&)>;

struct FamilyMember {
  ArcSet cut;             // over the arcs of the instance, inside H
  int g = 0;              // max of k - d(U) over the generators U
  VertexSet argmax;       // first generator attaining g
  std::vector<VertexSet> generators;
};

class CutFamilyOracle {
 public:
  // With d(U) = d^-_{A[T]}(U) for side 1 and d^+_{A[S]}(U) for side 2.
  CutFamilyOracle(const Instance& inst, FamilySide side, int k);
  // General form used by the residual peel: H' replaces H, `d` replaces
  // the side function.
  CutFamilyOracle(const Instance& inst, FamilySide side, int k,
                  const ArcSet& h, const SideFunction& d);

  FamilySide side() const { return side_; }
  int k() const { return k_; }
  const std::vector<FamilyMember>& members() const { return members_; }
  // Index of the member with this cut, if any.
  std::optional<int> Find(const ArcSet& cut) const;
  // g(C). Throws InputError when C is not in the family.
  int GValue(const ArcSet& cut) const;

 private:
  void Build(const Instance& inst, const ArcSet& h, const SideFunction& d);

  FamilySide side_;
  int k_;
  std::vector<FamilyMember> members_;
};

// Vertices of H in arc-index order and the rows of P_1 (side 1) or P_2
// (side 2) over them: 0 <= x <= 1, x(C) <= |C| - g(C) + 1, x(C) >= 1 when
// g(C) = k, and the per-vertex cap d_A(v) - (k-1)b(v).
struct GPolymatroidSystem {
  std::vector<int> h;  // variable j is arc h[j]
  std::vector<LpRow> rows;
};

GPolymatroidSystem BuildGPolymatroidSystem(const Instance& inst,
                                           const CutFamilyOracle& family);

struct ClaimReport {
  int k = 0;
  int members[2] = {0, 0};
  int intersecting_pairs = 0;
  int family_violations = 0;
  int supermodularity_violations = 0;
  int bound_violations = 0;
  bool interior_point_ok = true;
  bool integral_point_ok = true;
  std::vector<std::string> details;
  bool passed() const {
    return family_violations == 0 && supermodularity_violations == 0 &&
           bound_violations == 0 && interior_point_ok && integral_point_ok;
  }
};

// Re-derives every structural claim behind the packing construction on
// this instance: intersecting closure of both families, supermodularity of
// g on intersecting pairs, g <= min(k, |C|), feasibility of 1/k, and
// integrality of the vertex found in P_1 and P_2. Needs k >= 1.
ClaimReport CheckPackingClaims(const Instance& inst);

// A vertex of P_1 and P_2 intersected, as a 0/1 vector over `p1.h`,
// after checking 1/k against every row. Throws TheoremViolation with the
// LP text if the vertex is fractional or the point 1/k fails a row.
std::vector<int> FindIntegralPoint(const GPolymatroidSystem& p1,
                                   const GPolymatroidSystem& p2, int k);

struct CrossPartition {
  std::vector<ArcSet> classes;
  int peel_lp_solves = 0;
  bool exhaustive_fallback = false;
  // d_{H_j}(v) <= d_A(v) - (k-1)b(v) <= b(v) for all v, j, taken literally.
  bool literal_chain_holds = true;
};

// Partition of H into k classes such that every member C of either family
// meets at least g(C) classes and the per-class prescriptions
// max(0, b - d_{H_j}) fit the budgets d^-_{A[T]} and d^+_{A[S]}. Classes are
// peeled one at a time from integral vertices of a residual system, then
// re-verified; exhaustive search takes over if a peel fails.
// `copy_group` (optional) keeps arcs of one group in different classes.
CrossPartition PartitionCrossArcs(const Instance& inst, int k,
                                  const std::vector<int>* copy_group = nullptr);

// The conditions PartitionCrossArcs promises, checked from scratch.
bool VerifyCrossPartition(const Instance& inst, int k,
                          const std::vector<ArcSet>& classes,
                          std::string* why = nullptr);

struct PackingCertificate {
  MinMaxWitness witness;
  int k = 0;
  std::vector<ArcSet> cross_classes;
  std::vector<ArcSet> t_branchings;
  std::vector<ArcSet> s_cobranchings;
  std::vector<ArcSet> bibranchings;
  CrossPartition partition;
  bool verified = false;
};

// k disjoint b-bibranchings assembled as cobranching + cross class +
// branching. k defaults to the packing number; a smaller k is allowed.
PackingCertificate PackBBibranchings(
    const Instance& inst, std::optional<int> k = std::nullopt,
    const std::vector<int>* copy_group = nullptr);

// Pairwise disjoint and each one a b-bibranching.
bool VerifyPacking(const Instance& inst, const std::vector<ArcSet>& sets);

// Ground truth by search: every inclusion-minimal b-bibranching, then the
// largest pairwise disjoint selection. |A| <= 20.
int ExhaustivePackingNumber(const Instance& inst);

struct DecompositionResult {
  bool precondition_ok = false;
  std::string failed_row;
  std::vector<ArcSet> parts;
  bool verified = false;
  bool exhaustive_fallback = false;
};

// Splits an integer x in kP into k b-bibranching indicator vectors.
DecompositionResult IntegerDecompositionCheck(const Instance& inst, int k,
                                              const std::vector<int>& x);

// An integral vertex of kP minimizing `weights`, from the explicit system.
std::optional<std::vector<int>> ScaledPolytopeVertex(
    const Instance& inst, int k, const std::vector<Rational>& weights);

}  // namespace bbb

#endif  // BBB_PACKING_H_
