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

#include "bbb/prescribed_packing.h"

#include <string>

#include "bbb/matroid.h"
#include "bbb/rational.h"

namespace bbb {

PackingConditions CheckPackingConditions(
    const Digraph& d, const ArcSet& arcs, const DegreeVector& b,
    const std::vector<DegreeVector>& prescriptions) {
  const int n = d.num_vertices();
  if (n > kPackingVertexLimit) {
    throw GuardError("packing conditions need |V| <= " +
                     std::to_string(kPackingVertexLimit));
  }
  PackingConditions result;
  DegreeVector in = InDegrees(d, arcs);
  for (int v = 0; v < n && result.degree_ok; ++v) {
    int need = 0;
    for (const DegreeVector& bj : prescriptions) need += bj[v];
    if (in[v] < need) {
      result.degree_ok = false;
      result.degree_witness = v;
    }
  }
  // full[j]: vertices where b_j reaches b.
  std::vector<uint64_t> full;
  for (const DegreeVector& bj : prescriptions) {
    uint64_t mask = 0;
    for (int v = 0; v < n; ++v) {
      if (bj[v] == b[v]) mask |= uint64_t{1} << v;
    }
    full.push_back(mask);
  }
  std::vector<std::pair<int, int>> ends;
  for (int a : arcs.Members()) ends.emplace_back(d.arc(a).tail, d.arc(a).head);
  for (uint64_t x = 1; x < (uint64_t{1} << n); ++x) {
    int count = 0;
    for (uint64_t f : full) count += (x & ~f) == 0;
    if (count == 0) continue;
    int entering = 0;
    for (const auto& [tail, head] : ends) {
      entering += (x >> head & 1) && !(x >> tail & 1);
    }
    if (entering < count) {
      result.cut_ok = false;
      result.cut_witness = VertexSet::FromMask(n, x);
      break;
    }
  }
  return result;
}

namespace {

class PackingSearch {
 public:
  PackingSearch(const Digraph& d, const DegreeVector& b,
                const std::vector<DegreeVector>& pres,
                const std::vector<int>* group)
      : d_(d), b_(b), pres_(pres), group_(group), sparsity_(d, b),
        used_(d.num_arcs(), false) {
    for (size_t j = 0; j < pres.size(); ++j) classes_.push_back(d.NoArcs());
  }

  bool Run() { return Search(0, 0); }
  std::vector<ArcSet>& classes() { return classes_; }
  long nodes() const { return nodes_; }

 private:
  int k() const { return static_cast<int>(pres_.size()); }

  bool Search(int j, int v) {
    if (j == k()) return true;
    if (v == d_.num_vertices()) {
      if (j + 1 < k()) {
        std::vector<DegreeVector> rest(pres_.begin() + j + 1, pres_.end());
        if (!CheckPackingConditions(d_, Available(), b_, rest).holds()) {
          return false;
        }
      }
      return Search(j + 1, 0);
    }
    if (pres_[j][v] == 0) return Search(j, v + 1);
    std::vector<int> cands;
    for (int a : d_.in_arcs(v)) {
      if (!used_[a]) cands.push_back(a);
    }
    return Pick(j, v, cands, 0, pres_[j][v]);
  }

  bool SameKind(int a, int c) const {
    if (d_.arc(a).tail != d_.arc(c).tail) return false;
    return group_ == nullptr || (*group_)[a] == (*group_)[c];
  }

  bool GroupClash(int j, int a) const {
    if (group_ == nullptr) return false;
    for (int c : classes_[j].Members()) {
      if ((*group_)[c] == (*group_)[a]) return true;
    }
    return false;
  }

  bool Pick(int j, int v, const std::vector<int>& cands, size_t start,
            int need) {
    if (need == 0) return DegreesStillCoverable(j) && Search(j, v + 1);
    for (size_t i = start; i + need <= cands.size(); ++i) {
      int a = cands[i];
      // Interchangeable parallel arcs are taken in index order only.
      if (i > start && SameKind(cands[i - 1], a)) continue;
      if (GroupClash(j, a) || !sparsity_.CanAdd(classes_[j], a)) continue;
      if (++nodes_ > kPackingNodeLimit) {
        throw GuardError("prescribed packing search exceeded node limit");
      }
      used_[a] = true;
      classes_[j].Insert(a);
      if (Pick(j, v, cands, i + 1, need - 1)) return true;
      classes_[j].Erase(a);
      used_[a] = false;
    }
    return false;
  }

  // Every vertex still has enough unused in-arcs for what is left to pick.
  bool DegreesStillCoverable(int j) const {
    for (int u = 0; u < d_.num_vertices(); ++u) {
      int need = 0;
      for (int i = j; i < k(); ++i) need += pres_[i][u];
      need -= InDegreeIn(classes_[j], u);
      int avail = 0;
      for (int a : d_.in_arcs(u)) avail += !used_[a];
      if (avail < need) return false;
    }
    return true;
  }

  int InDegreeIn(const ArcSet& s, int u) const {
    int c = 0;
    for (int a : d_.in_arcs(u)) c += s.Contains(a);
    return c;
  }

  ArcSet Available() const {
    ArcSet s = d_.NoArcs();
    for (int a = 0; a < d_.num_arcs(); ++a) s.Set(a, !used_[a]);
    return s;
  }

  const Digraph& d_;
  const DegreeVector& b_;
  const std::vector<DegreeVector>& pres_;
  const std::vector<int>* group_;
  SparsityMatroid sparsity_;
  std::vector<bool> used_;
  std::vector<ArcSet> classes_;
  long nodes_ = 0;
};

}  // namespace

PrescribedPackingResult PackPrescribedBBranchings(
    const Digraph& d, const DegreeVector& b,
    const std::vector<DegreeVector>& prescriptions,
    const std::vector<int>* copy_group) {
  CheckCapacities(d, b);
  const int n = d.num_vertices();
  for (const DegreeVector& bj : prescriptions) {
    if (static_cast<int>(bj.size()) != n) {
      throw InputError("prescription size does not match the digraph");
    }
    bool equals_b = true;
    for (int v = 0; v < n; ++v) {
      if (bj[v] < 0 || bj[v] > b[v]) {
        throw InputError("prescription outside [0, b] at vertex " +
                         d.vertex_id(v));
      }
      equals_b = equals_b && bj[v] == b[v];
    }
    if (equals_b) throw InputError("prescription equals b");
  }
  if (copy_group && static_cast<int>(copy_group->size()) != d.num_arcs()) {
    throw InputError("copy groups do not match the digraph");
  }
  PrescribedPackingResult result;
  result.conditions =
      CheckPackingConditions(d, d.AllArcs(), b, prescriptions);
  if (!result.conditions.holds()) return result;
  PackingSearch search(d, b, prescriptions, copy_group);
  result.feasible = search.Run();
  result.nodes = search.nodes();
  if (!result.feasible) {
    if (copy_group == nullptr) {
      throw TheoremViolation(
          "packing conditions hold but no prescribed packing exists");
    }
    return result;
  }
  result.branchings = std::move(search.classes());
  for (size_t j = 0; j < prescriptions.size(); ++j) {
    if (!IsBBranching(d, b, result.branchings[j]) ||
        InDegrees(d, result.branchings[j]) != prescriptions[j]) {
      throw TheoremViolation("constructed branching failed verification");
    }
  }
  return result;
}

}  // namespace bbb
