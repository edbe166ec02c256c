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

#include "bbb/tdi.h"

#include <optional>
#include <set>

#include "bbb/bicut.h"
#include "bbb/simplex.h"

namespace bbb {

std::vector<VertexSet> DualIndexFamily(const Instance& inst) {
  const int n = inst.num_vertices();
  std::vector<VertexSet> family;
  std::set<VertexSet> seen;
  for (int v = 0; v < n; ++v) {
    VertexSet u(n, {v});
    seen.insert(u);
    family.push_back(std::move(u));
  }
  const VertexSet& t = inst.T();
  for (uint64_t mask = 1; mask < (uint64_t{1} << n); ++mask) {
    VertexSet u = VertexSet::FromMask(n, mask);
    if (u.IsSubsetOf(t) && u.Size() >= 2 && seen.insert(u).second) {
      family.push_back(std::move(u));
    }
  }
  for (uint64_t mask = 1; mask < (uint64_t{1} << n); ++mask) {
    VertexSet u = VertexSet::FromMask(n, mask);
    if (t.IsSubsetOf(u) && n - u.Size() >= 2 && seen.insert(u).second) {
      family.push_back(std::move(u));
    }
  }
  return family;
}

namespace {

// Coefficient of y(U) in the dual row of arc a.
int DualCoefficient(const Instance& inst, const VertexSet& u, int a) {
  const Arc& arc = inst.digraph().arc(a);
  if (u.Size() == 1) {
    int v = u.Members()[0];
    return (inst.InT(v) && arc.head == v) || (inst.InS(v) && arc.tail == v);
  }
  return u.Contains(arc.head) && !u.Contains(arc.tail);
}

Rational DualRowLhs(const Instance& inst, const DualSolution& dual, int a) {
  Rational lhs = 0;
  for (size_t i = 0; i < dual.family.size(); ++i) {
    if (DualCoefficient(inst, dual.family[i], a)) lhs += dual.y[i];
  }
  if (!dual.z.empty()) lhs -= dual.z[a];
  return lhs;
}

}  // namespace

Rational DualObjective(const Instance& inst, const DualSolution& dual) {
  Rational total = 0;
  for (size_t i = 0; i < dual.family.size(); ++i) {
    const VertexSet& u = dual.family[i];
    total += u.Size() == 1 ? dual.y[i] * inst.b()[u.Members()[0]] : dual.y[i];
  }
  for (const Rational& za : dual.z) total -= za;
  return total;
}

int FirstViolatedDualRow(const Instance& inst, const DualSolution& dual) {
  for (int a = 0; a < inst.num_arcs(); ++a) {
    if (DualRowLhs(inst, dual, a) > inst.weight(a)) return a;
    if (!dual.z.empty() && dual.z[a] < 0) return a;
  }
  for (const Rational& y : dual.y) {
    if (y < 0) return 0;
  }
  return -1;
}

namespace {

std::optional<Rational> ExplicitPrimal(const Instance& inst, bool boxed) {
  const Digraph& d = inst.digraph();
  RationalLP lp;
  for (int a = 0; a < d.num_arcs(); ++a) {
    lp.AddVariable("x" + std::to_string(a), Rational(0),
                   boxed ? std::optional<Rational>(1) : std::nullopt);
    lp.SetObjective(a, inst.weight(a));
  }
  for (int v = 0; v < d.num_vertices(); ++v) {
    LpRow row;
    for (int a : inst.InT(v) ? d.in_arcs(v) : d.out_arcs(v)) {
      row.coeffs[a] += 1;
    }
    row.rhs = inst.b()[v];
    lp.AddRow(std::move(row));
  }
  for (const VertexSet& u : EnumerateBicutSets(inst)) {
    LpRow row;
    for (int a : InCut(d, d.AllArcs(), u).Members()) row.coeffs[a] += 1;
    row.rhs = 1;
    lp.AddRow(std::move(row));
  }
  LpResult r = SimplexSolve(lp);
  if (r.status != LpStatus::kOptimal) return std::nullopt;
  return r.objective;
}

class DualFaceSearch {
 public:
  DualFaceSearch(const Instance& inst, bool boxed)
      : inst_(inst), family_(DualIndexFamily(inst)) {
    for (size_t i = 0; i < family_.size(); ++i) {
      lp_.AddVariable("y" + std::to_string(i));
      const VertexSet& u = family_[i];
      lp_.SetObjective(i, u.Size() == 1 ? Rational(inst.b()[u.Members()[0]])
                                        : Rational(1));
    }
    if (boxed) {
      for (int a = 0; a < inst.num_arcs(); ++a) {
        int j = lp_.AddVariable("z" + std::to_string(a));
        lp_.SetObjective(j, -1);
      }
    }
    for (int a = 0; a < inst.num_arcs(); ++a) {
      LpRow row;
      for (size_t i = 0; i < family_.size(); ++i) {
        if (DualCoefficient(inst, family_[i], a)) row.coeffs[i] = 1;
      }
      if (boxed) row.coeffs[family_.size() + a] = -1;
      row.relation = Relation::kLe;
      row.rhs = inst.weight(a);
      lp_.AddRow(std::move(row));
    }
    lp_.SetSense(LpSense::kMaximize);
  }

  std::optional<Rational> SolveLp() {
    LpResult r = SimplexSolve(lp_);
    if (r.status != LpStatus::kOptimal) return std::nullopt;
    return r.objective;
  }

  // Restricts to the optimal face and switches to the secondary objective.
  void FixFace(const Rational& optimum) {
    LpRow face;
    for (int j = 0; j < lp_.num_variables(); ++j) {
      if (lp_.objective()[j] != 0) face.coeffs[j] = lp_.objective()[j];
    }
    face.relation = Relation::kEq;
    face.rhs = optimum;
    face.name = "face";
    lp_.AddRow(std::move(face));
    const int n = inst_.num_vertices();
    // |U||V - U| first; among equals, fewer S vertices.
    for (size_t i = 0; i < family_.size(); ++i) {
      int size = family_[i].Size();
      int on_s = family_[i].Intersection(inst_.S()).Size();
      lp_.SetObjective(i, (n + 1) * size * (n - size) + on_s);
    }
    for (int j = family_.size(); j < lp_.num_variables(); ++j) {
      lp_.SetObjective(j, 1);
    }
    lp_.SetSense(LpSense::kMinimize);
  }

  std::optional<std::vector<Rational>> FindIntegral() { return Dfs(lp_); }

  int nodes() const { return nodes_; }
  bool exhausted() const { return exhausted_; }
  const std::vector<VertexSet>& family() const { return family_; }

 private:
  std::optional<std::vector<Rational>> Dfs(RationalLP& node) {
    if (++nodes_ > kTdiNodeLimit) {
      exhausted_ = true;
      return std::nullopt;
    }
    LpResult r = SimplexSolve(node);
    if (r.status != LpStatus::kOptimal) return std::nullopt;
    int frac = -1;
    for (int j = 0; j < node.num_variables() && frac < 0; ++j) {
      if (!IsIntegral(r.x[j])) frac = j;
    }
    if (frac < 0) return r.x;
    const LpVariable saved = node.variable(frac);
    Rational lo = Floor(r.x[frac]);
    for (int side = 0; side < 2 && !exhausted_; ++side) {
      RationalLP child = node;
      if (side == 0) {
        child.SetBounds(frac, saved.lower, lo);
      } else {
        child.SetBounds(frac, lo + 1, saved.upper);
      }
      if (auto found = Dfs(child)) return found;
    }
    return std::nullopt;
  }

  const Instance& inst_;
  std::vector<VertexSet> family_;
  RationalLP lp_;
  int nodes_ = 0;
  bool exhausted_ = false;
};

TdiSystemReport CheckSystem(const Instance& inst, bool boxed) {
  TdiSystemReport report;
  report.boxed = boxed;
  std::optional<Rational> primal = ExplicitPrimal(inst, boxed);
  if (!primal) {
    report.note = "primal infeasible";
    return report;
  }
  report.primal_feasible = true;
  report.primal_value = *primal;
  DualFaceSearch search(inst, boxed);
  std::optional<Rational> dual = search.SolveLp();
  if (!dual) {
    report.note = "dual LP not optimal";
    return report;
  }
  report.dual_lp_value = *dual;
  report.strong_duality = *dual == *primal;
  search.FixFace(*dual);
  std::optional<std::vector<Rational>> point = search.FindIntegral();
  report.nodes = search.nodes();
  if (!point) {
    report.note = search.exhausted() ? "node limit reached"
                                     : "no integral point on the optimal face";
    return report;
  }
  DualSolution& sol = report.integral_dual;
  sol.family = search.family();
  const size_t f = sol.family.size();
  sol.y.assign(point->begin(), point->begin() + f);
  if (boxed) sol.z.assign(point->begin() + f, point->end());
  sol.objective = DualObjective(inst, sol);
  report.integral_dual_found = FirstViolatedDualRow(inst, sol) < 0 &&
                               sol.objective == *primal;
  report.passed = report.strong_duality && report.integral_dual_found;
  if (!report.integral_dual_found) report.note = "recheck of dual failed";
  return report;
}

}  // namespace

TdiReport TdiSpotCheck(const Instance& inst) {
  if (inst.num_vertices() > kTdiVertexLimit) {
    throw GuardError("TDI check needs |V| <= " +
                     std::to_string(kTdiVertexLimit));
  }
  for (int a = 0; a < inst.num_arcs(); ++a) {
    if (!IsIntegral(inst.weight(a))) {
      throw InputError("TDI check needs integer weights");
    }
  }
  TdiReport report;
  report.unboxed = CheckSystem(inst, false);
  report.boxed = CheckSystem(inst, true);
  report.passed = report.unboxed.passed && report.boxed.passed;
  return report;
}

}  // namespace bbb
