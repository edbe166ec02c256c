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

#include "bbb/packing.h"

#include <algorithm>
#include <bit>
#include <map>

#include "bbb/bicut.h"
#include "bbb/prescribed_packing.h"

namespace bbb {

MinMaxWitness PackingNumber(const Instance& inst) {
  const Digraph& d = inst.digraph();
  DegreeVector in = InDegrees(d, d.AllArcs());
  DegreeVector out = OutDegrees(d, d.AllArcs());
  MinMaxWitness w;
  for (int v = 0; v < inst.num_vertices(); ++v) {
    if (inst.InT(v)) {
      int q = in[v] / inst.b()[v];
      if (w.t_argmin < 0 || q < w.t_min) {
        w.t_min = q;
        w.t_argmin = v;
      }
    } else {
      int q = out[v] / inst.b()[v];
      if (w.s_argmin < 0 || q < w.s_min) {
        w.s_min = q;
        w.s_argmin = v;
      }
    }
  }
  Bicut cut = MinBicut(inst, std::vector<Rational>(inst.num_arcs(), 1));
  w.bicut_min = static_cast<int>(cut.value.get_num().get_si());
  w.bicut_u = cut.u;
  w.k = std::min({w.t_min, w.s_min, w.bicut_min});
  return w;
}

namespace {

const VertexSet& SideSet(const Instance& inst, FamilySide side) {
  return side == FamilySide::kT ? inst.T() : inst.S();
}

// d^-_{A[T]}(U) for side 1, d^+_{A[S]}(U) for side 2.
int InnerCut(const Instance& inst, FamilySide side, const VertexSet& u) {
  const VertexSet& x = SideSet(inst, side);
  int count = 0;
  for (const Arc& a : inst.digraph().arcs()) {
    if (!x.Contains(a.tail) || !x.Contains(a.head)) continue;
    if (side == FamilySide::kT) {
      count += u.Contains(a.head) && !u.Contains(a.tail);
    } else {
      count += u.Contains(a.tail) && !u.Contains(a.head);
    }
  }
  return count;
}

// delta^-_h(U) for side 1 or delta^+_h(U) for side 2, within h.
ArcSet FamilyCut(const Instance& inst, FamilySide side, const ArcSet& h,
                 const VertexSet& u) {
  ArcSet cut = inst.digraph().NoArcs();
  for (int a : h.Members()) {
    const Arc& arc = inst.digraph().arc(a);
    if (u.Contains(side == FamilySide::kT ? arc.head : arc.tail)) {
      cut.Insert(a);
    }
  }
  return cut;
}

// Nonempty subsets of x in increasing mask order over the members of x.
std::vector<VertexSet> NonemptySubsets(const VertexSet& x) {
  std::vector<int> members = x.Members();
  if (members.size() > static_cast<size_t>(kFamilySideLimit)) {
    throw GuardError("cut family enumeration needs at most " +
                     std::to_string(kFamilySideLimit) + " vertices per side");
  }
  std::vector<VertexSet> out;
  for (uint32_t m = 1; m < (uint32_t{1} << members.size()); ++m) {
    VertexSet u(x.universe());
    for (size_t i = 0; i < members.size(); ++i) {
      if (m >> i & 1) u.Insert(members[i]);
    }
    out.push_back(std::move(u));
  }
  return out;
}

int Count(const ArcSet& s) { return s.Size(); }

}  // namespace

CutFamilyOracle::CutFamilyOracle(const Instance& inst, FamilySide side, int k)
    : side_(side), k_(k) {
  Build(inst, inst.CrossArcs(), [&](const VertexSet& u) {
    return InnerCut(inst, side, u);
  });
}

CutFamilyOracle::CutFamilyOracle(const Instance& inst, FamilySide side, int k,
                                 const ArcSet& h, const SideFunction& d)
    : side_(side), k_(k) {
  Build(inst, h, d);
}

void CutFamilyOracle::Build(const Instance& inst, const ArcSet& h,
                            const SideFunction& d) {
  std::map<ArcSet, int> index;
  for (const VertexSet& u : NonemptySubsets(SideSet(inst, side_))) {
    ArcSet cut = FamilyCut(inst, side_, h, u);
    int value = k_ - d(u);
    auto [it, fresh] = index.emplace(cut, static_cast<int>(members_.size()));
    if (fresh) {
      members_.push_back(FamilyMember{cut, value, u, {}});
    }
    FamilyMember& m = members_[it->second];
    if (value > m.g) {
      m.g = value;
      m.argmax = u;
    }
    m.generators.push_back(u);
  }
}

std::optional<int> CutFamilyOracle::Find(const ArcSet& cut) const {
  for (size_t i = 0; i < members_.size(); ++i) {
    if (members_[i].cut == cut) return static_cast<int>(i);
  }
  return std::nullopt;
}

int CutFamilyOracle::GValue(const ArcSet& cut) const {
  std::optional<int> i = Find(cut);
  if (!i) throw InputError("arc set is not a member of the cut family");
  return members_[*i].g;
}

namespace {

LpRow SumRow(const std::vector<int>& var_of_arc, const ArcSet& arcs,
             Relation relation, Rational rhs, std::string name) {
  LpRow row;
  for (int a : arcs.Members()) row.coeffs[var_of_arc[a]] += 1;
  row.relation = relation;
  row.rhs = std::move(rhs);
  row.name = std::move(name);
  return row;
}

std::vector<int> VariableIndex(const Instance& inst,
                               const std::vector<int>& h) {
  std::vector<int> var(inst.num_arcs(), -1);
  for (size_t j = 0; j < h.size(); ++j) var[h[j]] = static_cast<int>(j);
  return var;
}

}  // namespace

GPolymatroidSystem BuildGPolymatroidSystem(const Instance& inst,
                                           const CutFamilyOracle& family) {
  const Digraph& d = inst.digraph();
  const int k = family.k();
  const FamilySide side = family.side();
  GPolymatroidSystem sys;
  sys.h = inst.CrossArcs().Members();
  std::vector<int> var = VariableIndex(inst, sys.h);
  const std::string tag = side == FamilySide::kT ? "p1" : "p2";
  for (size_t j = 0; j < sys.h.size(); ++j) {
    ArcSet one = d.NoArcs();
    one.Insert(sys.h[j]);
    sys.rows.push_back(SumRow(var, one, Relation::kGe, 0, tag + "_lo"));
    sys.rows.push_back(SumRow(var, one, Relation::kLe, 1, tag + "_hi"));
  }
  for (const FamilyMember& m : family.members()) {
    sys.rows.push_back(SumRow(var, m.cut, Relation::kLe,
                              Count(m.cut) - m.g + 1, tag + "_cap"));
    if (m.g == k) {
      sys.rows.push_back(SumRow(var, m.cut, Relation::kGe, 1, tag + "_cover"));
    }
  }
  const ArcSet h = inst.CrossArcs();
  for (int v : SideSet(inst, side).Members()) {
    ArcSet star = FamilyCut(inst, side, h, VertexSet(inst.num_vertices(), {v}));
    int deg = side == FamilySide::kT ? static_cast<int>(d.in_arcs(v).size())
                                     : static_cast<int>(d.out_arcs(v).size());
    sys.rows.push_back(SumRow(var, star, Relation::kLe,
                              deg - (k - 1) * inst.b()[v], tag + "_deg"));
  }
  return sys;
}

std::vector<int> FindIntegralPoint(const GPolymatroidSystem& p1,
                                   const GPolymatroidSystem& p2, int k) {
  if (k < 1) throw InputError("integral point search needs k >= 1");
  if (p1.h != p2.h) throw InputError("systems live on different arc sets");
  const int n = static_cast<int>(p1.h.size());
  std::vector<Rational> interior(n, Rational(1, k));
  RationalLP lp;
  for (int j = 0; j < n; ++j) {
    lp.AddVariable("h" + std::to_string(p1.h[j]), Rational(0), Rational(1));
    lp.SetObjective(j, 1);
  }
  for (const GPolymatroidSystem* sys : {&p1, &p2}) {
    for (const LpRow& row : sys->rows) {
      if (!RowSatisfied(row, interior)) {
        throw TheoremViolation("1/k violates row " + row.name);
      }
      lp.AddRow(row);
    }
  }
  LpResult r = SimplexSolve(lp);
  if (r.status != LpStatus::kOptimal) {
    throw TheoremViolation("P1 and P2 do not meet\n" + lp.ToLpText());
  }
  std::vector<int> point(n);
  for (int j = 0; j < n; ++j) {
    if (r.x[j] != 0 && r.x[j] != 1) {
      throw TheoremViolation("fractional vertex of P1 and P2\n" +
                             lp.ToLpText());
    }
    point[j] = r.x[j] == 1;
  }
  return point;
}

ClaimReport CheckPackingClaims(const Instance& inst) {
  ClaimReport report;
  MinMaxWitness w = PackingNumber(inst);
  report.k = w.k;
  if (w.k < 1) throw InputError("packing claims need k >= 1");
  const int k = w.k;
  CutFamilyOracle families[2] = {CutFamilyOracle(inst, FamilySide::kT, k),
                                 CutFamilyOracle(inst, FamilySide::kS, k)};
  for (int i = 0; i < 2; ++i) {
    const CutFamilyOracle& f = families[i];
    const auto& members = f.members();
    report.members[i] = static_cast<int>(members.size());
    for (const FamilyMember& m : members) {
      if (m.g > std::min(k, Count(m.cut))) {
        ++report.bound_violations;
        report.details.push_back("g above min(k,|C|) on side " +
                                 std::to_string(i + 1));
      }
    }
    for (size_t x = 0; x < members.size(); ++x) {
      for (size_t y = x + 1; y < members.size(); ++y) {
        const ArcSet& cx = members[x].cut;
        const ArcSet& cy = members[y].cut;
        if (!cx.Intersects(cy)) continue;
        ++report.intersecting_pairs;
        std::optional<int> u = f.Find(cx.Union(cy));
        std::optional<int> n = f.Find(cx.Intersection(cy));
        if (!u || !n) {
          ++report.family_violations;
          report.details.push_back("family not closed on side " +
                                   std::to_string(i + 1));
          continue;
        }
        if (members[x].g + members[y].g > members[*u].g + members[*n].g) {
          ++report.supermodularity_violations;
          report.details.push_back("g not supermodular on side " +
                                   std::to_string(i + 1));
        }
      }
    }
  }
  GPolymatroidSystem p1 = BuildGPolymatroidSystem(inst, families[0]);
  GPolymatroidSystem p2 = BuildGPolymatroidSystem(inst, families[1]);
  std::vector<Rational> interior(p1.h.size(), Rational(1, k));
  for (const GPolymatroidSystem* sys : {&p1, &p2}) {
    for (const LpRow& row : sys->rows) {
      if (!RowSatisfied(row, interior)) {
        report.interior_point_ok = false;
        report.details.push_back("1/k violates " + row.name);
      }
    }
  }
  if (report.interior_point_ok) {
    try {
      FindIntegralPoint(p1, p2, k);
    } catch (const TheoremViolation& e) {
      report.integral_point_ok = false;
      report.details.push_back(e.what());
    }
  }
  return report;
}

namespace {

bool GroupsRespected(const std::vector<ArcSet>& classes,
                     const std::vector<int>* group) {
  if (group == nullptr) return true;
  for (const ArcSet& c : classes) {
    std::vector<int> seen;
    for (int a : c.Members()) {
      if (std::find(seen.begin(), seen.end(), (*group)[a]) != seen.end()) {
        return false;
      }
      seen.push_back((*group)[a]);
    }
  }
  return true;
}

bool VerifyPartitionWithGroups(const Instance& inst, int k,
                               const std::vector<ArcSet>& classes,
                               const std::vector<int>* group,
                               std::string* why) {
  if (!VerifyCrossPartition(inst, k, classes, why)) return false;
  if (!GroupsRespected(classes, group)) {
    if (why) *why = "two copies of one arc share a class";
    return false;
  }
  return true;
}

// Degree of v into (side 1) or out of (side 2) the arcs of s.
int SideDegree(const Instance& inst, FamilySide side, const ArcSet& s, int v) {
  const Digraph& d = inst.digraph();
  int c = 0;
  for (int a : side == FamilySide::kT ? d.in_arcs(v) : d.out_arcs(v)) {
    c += s.Contains(a);
  }
  return c;
}

class Peeler {
 public:
  Peeler(const Instance& inst, int k, const std::vector<int>* group)
      : inst_(inst), k_(k), group_(group) {}

  // Empty result on failure.
  std::vector<ArcSet> Run(int& lp_solves) {
    const Digraph& d = inst_.digraph();
    ArcSet rest = inst_.CrossArcs();
    std::vector<ArcSet> peeled;
    std::vector<int> budget[2];
    for (int i = 0; i < 2; ++i) {
      FamilySide side = i == 0 ? FamilySide::kT : FamilySide::kS;
      budget[i].assign(inst_.num_vertices(), 0);
      for (int v : SideSet(inst_, side).Members()) {
        VertexSet single(inst_.num_vertices(), {v});
        budget[i][v] = InnerCut(inst_, side, single);
      }
    }
    for (int left = k_; left >= 2; --left) {
      std::vector<int> h = rest.Members();
      std::vector<int> var = VariableIndex(inst_, h);
      RationalLP lp;
      for (size_t j = 0; j < h.size(); ++j) {
        lp.AddVariable("h" + std::to_string(h[j]), Rational(0), Rational(1));
        lp.SetObjective(j, 1);
      }
      for (int i = 0; i < 2; ++i) {
        FamilySide side = i == 0 ? FamilySide::kT : FamilySide::kS;
        auto residual = [&](const VertexSet& u) {
          int missing = 0;
          for (const ArcSet& c : peeled) {
            missing += FamilyCut(inst_, side, c, u).Empty();
          }
          return InnerCut(inst_, side, u) - missing;
        };
        CutFamilyOracle family(inst_, side, left, rest, residual);
        for (const FamilyMember& m : family.members()) {
          lp.AddRow(SumRow(var, m.cut, Relation::kLe,
                           Count(m.cut) - m.g + 1, "cap"));
          if (m.g >= left) {
            lp.AddRow(SumRow(var, m.cut, Relation::kGe, 1, "cover"));
          }
        }
        for (int v : SideSet(inst_, side).Members()) {
          ArcSet star =
              FamilyCut(inst_, side, rest, VertexSet(d.num_vertices(), {v}));
          const int b = inst_.b()[v];
          lp.AddRow(SumRow(var, star, Relation::kLe,
                           Count(star) + budget[i][v] - (left - 1) * b, "hi"));
          lp.AddRow(SumRow(var, star, Relation::kGe,
                           std::max(0, b - budget[i][v]), "lo"));
        }
      }
      if (group_) {
        std::map<int, ArcSet> by_group;
        for (int a : h) {
          auto it = by_group.try_emplace((*group_)[a], d.NoArcs()).first;
          it->second.Insert(a);
        }
        for (const auto& [g, arcs] : by_group) {
          if (arcs.Size() > 1) {
            lp.AddRow(SumRow(var, arcs, Relation::kLe, 1, "copies"));
          }
        }
      }
      LpResult r = SimplexSolve(lp);
      ++lp_solves;
      if (r.status != LpStatus::kOptimal) return {};
      ArcSet chosen = d.NoArcs();
      for (size_t j = 0; j < h.size(); ++j) {
        if (r.x[j] != 0 && r.x[j] != 1) return {};
        if (r.x[j] == 1) chosen.Insert(h[j]);
      }
      for (int i = 0; i < 2; ++i) {
        FamilySide side = i == 0 ? FamilySide::kT : FamilySide::kS;
        for (int v : SideSet(inst_, side).Members()) {
          budget[i][v] -=
              std::max(0, inst_.b()[v] - SideDegree(inst_, side, chosen, v));
        }
      }
      rest = rest.Minus(chosen);
      peeled.push_back(std::move(chosen));
    }
    peeled.push_back(rest);
    return peeled;
  }

 private:
  const Instance& inst_;
  int k_;
  const std::vector<int>* group_;
};

constexpr long kPartitionNodeLimit = 5000000;
// With copy groups the search only decides a sufficient route; callers
// have their own fallback, so it gives up early.
constexpr long kGroupedPartitionNodeLimit = 20000;

// Every assignment of H to k classes, classes opened in order.
class PartitionSearch {
 public:
  PartitionSearch(const Instance& inst, int k, const std::vector<int>* group)
      : inst_(inst), k_(k), group_(group), h_(inst.CrossArcs().Members()) {
    for (int j = 0; j < k; ++j) classes_.push_back(inst.digraph().NoArcs());
  }

  std::vector<ArcSet> Run() {
    if (Assign(0, 0)) return classes_;
    return {};
  }

 private:
  bool Assign(size_t i, int opened) {
    const long limit =
        group_ ? kGroupedPartitionNodeLimit : kPartitionNodeLimit;
    if (++nodes_ > limit) {
      throw GuardError("cross-arc partition search exceeded node limit");
    }
    if (i == h_.size()) {
      return VerifyPartitionWithGroups(inst_, k_, classes_, group_, nullptr);
    }
    for (int j = 0; j < std::min(opened + 1, k_); ++j) {
      classes_[j].Insert(h_[i]);
      if (Assign(i + 1, std::max(opened, j + 1))) return true;
      classes_[j].Erase(h_[i]);
    }
    return false;
  }

  const Instance& inst_;
  int k_;
  const std::vector<int>* group_;
  std::vector<int> h_;
  std::vector<ArcSet> classes_;
  long nodes_ = 0;
};

}  // namespace

bool VerifyCrossPartition(const Instance& inst, int k,
                          const std::vector<ArcSet>& classes,
                          std::string* why) {
  auto fail = [&](const std::string& reason) {
    if (why) *why = reason;
    return false;
  };
  if (static_cast<int>(classes.size()) != k) return fail("wrong class count");
  ArcSet all = inst.digraph().NoArcs();
  for (const ArcSet& c : classes) {
    if (c.Intersects(all)) return fail("classes overlap");
    all = all.Union(c);
  }
  if (all != inst.CrossArcs()) return fail("classes do not cover A[S,T]");
  for (FamilySide side : {FamilySide::kT, FamilySide::kS}) {
    CutFamilyOracle family(inst, side, k);
    for (const FamilyMember& m : family.members()) {
      int hit = 0;
      for (const ArcSet& c : classes) hit += c.Intersects(m.cut);
      if (hit < m.g) return fail("a family member meets too few classes");
    }
    for (int v : SideSet(inst, side).Members()) {
      int need = 0;
      for (const ArcSet& c : classes) {
        need += std::max(0, inst.b()[v] - SideDegree(inst, side, c, v));
      }
      VertexSet single(inst.num_vertices(), {v});
      if (need > InnerCut(inst, side, single)) {
        return fail("prescriptions exceed the inner degree at " +
                    inst.digraph().vertex_id(v));
      }
    }
  }
  return true;
}

CrossPartition PartitionCrossArcs(const Instance& inst, int k,
                                  const std::vector<int>* copy_group) {
  if (k < 1) throw InputError("partition needs k >= 1");
  CrossPartition out;
  out.classes = Peeler(inst, k, copy_group).Run(out.peel_lp_solves);
  if (out.classes.empty() ||
      !VerifyPartitionWithGroups(inst, k, out.classes, copy_group, nullptr)) {
    out.exhaustive_fallback = true;
    out.classes = PartitionSearch(inst, k, copy_group).Run();
    if (out.classes.empty()) {
      if (copy_group) return out;
      throw TheoremViolation("no partition of A[S,T] meets the conditions");
    }
  }
  const Digraph& d = inst.digraph();
  for (const ArcSet& c : out.classes) {
    for (int v = 0; v < inst.num_vertices(); ++v) {
      int deg = inst.InT(v) ? SideDegree(inst, FamilySide::kT, c, v)
                            : SideDegree(inst, FamilySide::kS, c, v);
      int total = inst.InT(v) ? static_cast<int>(d.in_arcs(v).size())
                              : static_cast<int>(d.out_arcs(v).size());
      int cap = total - (k - 1) * inst.b()[v];
      if (deg > cap || cap > inst.b()[v]) out.literal_chain_holds = false;
    }
  }
  return out;
}

bool VerifyPacking(const Instance& inst, const std::vector<ArcSet>& sets) {
  ArcSet seen = inst.digraph().NoArcs();
  for (const ArcSet& s : sets) {
    if (s.Intersects(seen) || !IsBBibranching(inst, s)) return false;
    seen = seen.Union(s);
  }
  return true;
}

namespace {

// Prescribed packing on D[X] (reversed for S), mapped back to A.
std::optional<std::vector<ArcSet>> PackSide(const Instance& inst,
                                            FamilySide side,
                                            const std::vector<ArcSet>& classes,
                                            const std::vector<int>* group) {
  SubDigraph sub = InducedSubgraph(inst.digraph(), SideSet(inst, side));
  Digraph g = side == FamilySide::kT ? sub.graph : sub.graph.Reversed();
  DegreeVector b;
  for (int v : sub.parent_vertex) b.push_back(inst.b()[v]);
  std::vector<DegreeVector> pres;
  for (const ArcSet& c : classes) {
    DegreeVector bj;
    for (int v : sub.parent_vertex) {
      bj.push_back(std::max(0, inst.b()[v] - SideDegree(inst, side, c, v)));
    }
    pres.push_back(std::move(bj));
  }
  std::vector<int> local_group;
  if (group) {
    for (int a : sub.parent_arc) local_group.push_back((*group)[a]);
  }
  PrescribedPackingResult r = PackPrescribedBBranchings(
      g, b, pres, group ? &local_group : nullptr);
  if (!r.feasible) {
    if (group) return std::nullopt;
    throw TheoremViolation("prescribed packing failed on a verified partition");
  }
  std::vector<ArcSet> mapped;
  for (const ArcSet& local : r.branchings) {
    ArcSet s = inst.digraph().NoArcs();
    for (int a : local.Members()) s.Insert(sub.parent_arc[a]);
    mapped.push_back(std::move(s));
  }
  return mapped;
}

}  // namespace

PackingCertificate PackBBibranchings(const Instance& inst,
                                     std::optional<int> k,
                                     const std::vector<int>* copy_group) {
  PackingCertificate cert;
  cert.witness = PackingNumber(inst);
  cert.k = k.value_or(cert.witness.k);
  if (cert.k < 0 || cert.k > cert.witness.k) {
    throw InputError("k must lie in [0, packing number]");
  }
  if (cert.k == 0) {
    cert.verified = true;
    return cert;
  }
  cert.partition = PartitionCrossArcs(inst, cert.k, copy_group);
  if (cert.partition.classes.empty()) return cert;
  cert.cross_classes = cert.partition.classes;
  auto t_side = PackSide(inst, FamilySide::kT, cert.cross_classes, copy_group);
  auto s_side = PackSide(inst, FamilySide::kS, cert.cross_classes, copy_group);
  if (!t_side || !s_side) return cert;
  cert.t_branchings = std::move(*t_side);
  cert.s_cobranchings = std::move(*s_side);
  for (int j = 0; j < cert.k; ++j) {
    cert.bibranchings.push_back(cert.s_cobranchings[j]
                                    .Union(cert.cross_classes[j])
                                    .Union(cert.t_branchings[j]));
  }
  cert.verified = VerifyPacking(inst, cert.bibranchings) &&
                  GroupsRespected(cert.bibranchings, copy_group);
  if (!cert.verified && copy_group == nullptr) {
    throw TheoremViolation("assembled packing failed verification");
  }
  return cert;
}

int ExhaustivePackingNumber(const Instance& inst) {
  const int m = inst.num_arcs();
  if (m > kExhaustiveArcLimit) {
    throw GuardError("exhaustive packing needs |A| <= " +
                     std::to_string(kExhaustiveArcLimit));
  }
  MaskValidity check(inst);
  std::vector<uint32_t> minimal;
  for (uint32_t mask = 0; mask < (uint32_t{1} << m); ++mask) {
    if (check.Minimal(mask)) minimal.push_back(mask);
  }
  if (minimal.empty()) return 0;
  // Never zero: b >= 1 rules out the empty set.
  int min_size = m;
  for (uint32_t s : minimal) min_size = std::min(min_size, std::popcount(s));
  int best = 0;
  std::function<void(size_t, uint32_t, int)> dfs = [&](size_t start,
                                                        uint32_t used,
                                                        int count) {
    best = std::max(best, count);
    int free_arcs = m - std::popcount(used);
    if (count + free_arcs / min_size <= best) return;
    for (size_t i = start; i < minimal.size(); ++i) {
      if (minimal[i] & used) continue;
      dfs(i + 1, used | minimal[i], count + 1);
    }
  };
  dfs(0, 0, 0);
  return best;
}

namespace {

constexpr int kDecompositionFreeArcLimit = 20;

// Splits x in kP one b-bibranching at a time: B takes every arc with
// x(a) = k and a subset of the arcs with 0 < x(a) < k such that x - B
// stays in (k-1)P. Membership in (k-1)P is checked row by row, so the
// first B that passes never needs to be revisited.
class PeelDecomposition {
 public:
  explicit PeelDecomposition(const Instance& inst) : inst_(inst), check_(inst) {
    const Digraph& d = inst.digraph();
    for (const VertexSet& u : EnumerateBicutSets(inst)) {
      cut_arcs_.push_back(InCut(d, d.AllArcs(), u).Members());
    }
    for (int v = 0; v < d.num_vertices(); ++v) {
      degree_arcs_.push_back(inst.InT(v) ? d.in_arcs(v) : d.out_arcs(v));
    }
  }

  std::optional<std::vector<uint32_t>> Run(std::vector<int> x, int k) {
    std::vector<uint32_t> parts;
    for (; k >= 1; --k) {
      std::optional<uint32_t> part = Peel(x, k);
      if (!part) return std::nullopt;
      for (int a = 0; a < inst_.num_arcs(); ++a) x[a] -= *part >> a & 1;
      parts.push_back(*part);
    }
    return parts;
  }

 private:
  std::optional<uint32_t> Peel(const std::vector<int>& x, int k) {
    uint32_t forced = 0;
    std::vector<int> free;
    for (int a = 0; a < inst_.num_arcs(); ++a) {
      if (x[a] == k) forced |= uint32_t{1} << a;
      if (x[a] > 0 && x[a] < k) free.push_back(a);
    }
    if (free.size() > kDecompositionFreeArcLimit) {
      throw GuardError("decomposition peel needs at most " +
                       std::to_string(kDecompositionFreeArcLimit) +
                       " fractional arcs");
    }
    std::vector<int> rest(x.size());
    for (uint32_t pick = 0; pick < (uint32_t{1} << free.size()); ++pick) {
      uint32_t part = forced;
      for (size_t i = 0; i < free.size(); ++i) {
        if (pick >> i & 1) part |= uint32_t{1} << free[i];
      }
      if (!check_.Valid(part)) continue;
      for (size_t a = 0; a < x.size(); ++a) rest[a] = x[a] - (part >> a & 1);
      if (InScaledPolytope(rest, k - 1)) return part;
    }
    return std::nullopt;
  }

  bool InScaledPolytope(const std::vector<int>& y, int k) const {
    for (size_t v = 0; v < degree_arcs_.size(); ++v) {
      int total = 0;
      for (int a : degree_arcs_[v]) total += y[a];
      if (total < k * inst_.b()[v]) return false;
    }
    for (const std::vector<int>& cut : cut_arcs_) {
      int total = 0;
      for (int a : cut) total += y[a];
      if (total < k) return false;
    }
    return true;
  }

  const Instance& inst_;
  MaskValidity check_;
  std::vector<std::vector<int>> cut_arcs_;
  std::vector<std::vector<int>> degree_arcs_;
};

}  // namespace

DecompositionResult IntegerDecompositionCheck(const Instance& inst, int k,
                                              const std::vector<int>& x) {
  const Digraph& d = inst.digraph();
  DecompositionResult out;
  if (k < 1) throw InputError("decomposition needs k >= 1");
  if (static_cast<int>(x.size()) != d.num_arcs()) {
    throw InputError("vector has wrong dimension");
  }
  for (int a = 0; a < d.num_arcs(); ++a) {
    if (x[a] < 0 || x[a] > k) {
      out.failed_row = "0 <= x(a) <= k at arc " + std::to_string(a);
      return out;
    }
  }
  for (int v = 0; v < d.num_vertices(); ++v) {
    int total = 0;
    for (int a : inst.InT(v) ? d.in_arcs(v) : d.out_arcs(v)) total += x[a];
    if (total < k * inst.b()[v]) {
      out.failed_row = "scaled degree row at " + d.vertex_id(v);
      return out;
    }
  }
  std::vector<Rational> xr(x.begin(), x.end());
  Bicut cut = MinBicut(inst, xr);
  if (cut.value < k) {
    out.failed_row = "scaled bicut row";
    return out;
  }
  out.precondition_ok = true;

  Digraph multi_graph;
  for (int v = 0; v < d.num_vertices(); ++v)
    multi_graph.AddVertex(d.vertex_id(v));
  std::vector<int> group;
  std::vector<Rational> weights;
  for (int a = 0; a < d.num_arcs(); ++a) {
    for (int c = 0; c < x[a]; ++c) {
      multi_graph.AddArc(d.arc(a).tail, d.arc(a).head);
      group.push_back(a);
      weights.push_back(inst.weight(a));
    }
  }
  Instance multi(multi_graph, inst.sides(), inst.b(), weights);
  std::vector<ArcSet> classes;
  std::optional<PackingCertificate> cert;
  try {
    cert = PackBBibranchings(multi, k, &group);
  } catch (const GuardError&) {
    cert.reset();
  }
  if (cert && cert->verified) {
    classes = cert->bibranchings;
  } else {
    out.exhaustive_fallback = true;
    auto parts = PeelDecomposition(inst).Run(x, k);
    if (!parts) throw TheoremViolation("no decomposition of x exists");
    group.clear();
    for (int a = 0; a < d.num_arcs(); ++a) group.push_back(a);
    for (uint32_t mask : *parts) {
      classes.push_back(ArcSet::FromMask(d.num_arcs(), mask));
    }
  }
  // Map back and hand leftover copies to parts missing that arc.
  out.parts.assign(k, d.NoArcs());
  for (int j = 0; j < k; ++j) {
    for (int c : classes[j].Members()) out.parts[j].Insert(group[c]);
  }
  for (int a = 0; a < d.num_arcs(); ++a) {
    int have = 0;
    for (const ArcSet& p : out.parts) have += p.Contains(a);
    for (int j = 0; j < k && have < x[a]; ++j) {
      if (!out.parts[j].Contains(a)) {
        out.parts[j].Insert(a);
        ++have;
      }
    }
  }
  bool ok = true;
  for (int a = 0; a < d.num_arcs(); ++a) {
    int sum = 0;
    for (const ArcSet& p : out.parts) sum += p.Contains(a);
    ok = ok && sum == x[a];
  }
  for (const ArcSet& p : out.parts) ok = ok && IsBBibranching(inst, p);
  out.verified = ok;
  return out;
}

std::optional<std::vector<int>> ScaledPolytopeVertex(
    const Instance& inst, int k, const std::vector<Rational>& weights) {
  const Digraph& d = inst.digraph();
  RationalLP lp;
  for (int a = 0; a < d.num_arcs(); ++a) {
    lp.AddVariable("x" + std::to_string(a), Rational(0), Rational(k));
    lp.SetObjective(a, weights[a]);
  }
  for (int v = 0; v < d.num_vertices(); ++v) {
    LpRow row;
    for (int a : inst.InT(v) ? d.in_arcs(v) : d.out_arcs(v)) row.coeffs[a] += 1;
    row.rhs = k * inst.b()[v];
    lp.AddRow(std::move(row));
  }
  for (const VertexSet& u : EnumerateBicutSets(inst)) {
    LpRow row;
    for (int a : InCut(d, d.AllArcs(), u).Members()) row.coeffs[a] += 1;
    row.rhs = k;
    lp.AddRow(std::move(row));
  }
  LpResult r = SimplexSolve(lp);
  if (r.status != LpStatus::kOptimal) return std::nullopt;
  std::vector<int> x;
  for (const Rational& v : r.x) {
    if (!IsIntegral(v)) throw TheoremViolation("fractional vertex of kP");
    x.push_back(static_cast<int>(v.get_num().get_si()));
  }
  return x;
}

}  // namespace bbb
