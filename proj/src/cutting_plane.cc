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

#include "bbb/cutting_plane.h"

namespace bbb {
namespace {

std::string VertexSetName(const Instance& inst, const VertexSet& u) {
  std::string name;
  for (int v : u.Members()) {
    if (!name.empty()) name += ",";
    name += inst.digraph().vertex_id(v);
  }
  return name;
}

class CuttingPlane {
 public:
  CuttingPlane(const Instance& inst, const CuttingPlaneOptions& options)
      : inst_(inst), options_(options) {
    const Digraph& d = inst.digraph();
    for (int a = 0; a < d.num_arcs(); ++a) {
      lp_.AddVariable("x" + std::to_string(a), Rational(0),
                      options.box ? std::optional<Rational>(1) : std::nullopt);
      lp_.SetObjective(a, inst.weight(a));
    }
    for (int v = 0; v < d.num_vertices(); ++v) {
      LpRow row;
      const auto& arcs = inst.InT(v) ? d.in_arcs(v) : d.out_arcs(v);
      for (int a : arcs) row.coeffs[a] += 1;
      row.relation = Relation::kGe;
      row.rhs = inst.b()[v];
      row.name = (inst.InT(v) ? "indeg_" : "outdeg_") + d.vertex_id(v);
      lp_.AddRow(std::move(row));
    }
  }

  // Solves the current node to a cut-closed optimum. False if infeasible.
  bool CloseNode(RationalLP& node, LpResult& out) {
    for (int round = 0; round < options_.max_rounds; ++round) {
      SyncCuts(node);
      out = SimplexSolve(node);
      ++result_.lp_solves;
      result_.pivots += out.pivots;
      if (out.status != LpStatus::kOptimal) return false;
      // x >= 0 with w >= 0, so unbounded cannot occur.
      std::optional<Bicut> cut = SeparateBicut(inst_, out.x);
      if (!cut) return true;
      AddCut(std::move(*cut));
    }
    throw GuardError("cutting plane exceeded the round limit");
  }

  CuttingPlaneResult Run() {
    LpResult root;
    RationalLP node = lp_;
    if (!CloseNode(node, root)) {
      result_.witness = FindInfeasibility(inst_);
      Finish(node);
      return result_;
    }
    std::optional<std::vector<Rational>> best_x;
    Rational best_value;
    Branch(node, root, best_x, best_value);
    if (best_x) {
      result_.feasible = true;
      result_.x = *best_x;
      result_.value = best_value;
      ArcSet arcs = inst_.digraph().NoArcs();
      for (int a = 0; a < inst_.num_arcs(); ++a) {
        if (result_.x[a] != 0) arcs.Insert(a);
      }
      result_.solution = MakeSolution(inst_, std::move(arcs));
      if (!result_.solution->certificate.valid) {
        throw TheoremViolation("cutting-plane vertex is not a b-bibranching");
      }
      SyncCuts(lp_);
      for (int i = 0; i < lp_.num_rows(); ++i) {
        if (RowActivity(lp_.row(i), result_.x) == lp_.row(i).rhs) {
          result_.active_rows.push_back(lp_.row(i).name);
        }
      }
    } else {
      result_.witness = FindInfeasibility(inst_);
    }
    Finish(lp_);
    return result_;
  }

 private:
  void AddCut(Bicut cut) { result_.cuts.push_back(std::move(cut)); }

  // Appends pool cuts not yet present in `lp`. Degree rows come first, so
  // row index minus vertex count is the cut index.
  void SyncCuts(RationalLP& lp) {
    const int n = inst_.num_vertices();
    for (size_t c = lp.num_rows() - n; c < result_.cuts.size(); ++c) {
      const Bicut& cut = result_.cuts[c];
      LpRow row;
      for (int a : cut.arcs.Members()) row.coeffs[a] += 1;
      row.relation = Relation::kGe;
      row.rhs = 1;
      row.name = "bicut_" + VertexSetName(inst_, cut.u);
      lp.AddRow(std::move(row));
    }
  }

  void Branch(RationalLP& node, const LpResult& lp_result,
              std::optional<std::vector<Rational>>& best_x,
              Rational& best_value) {
    if (best_x && lp_result.objective >= best_value) return;
    int frac = -1;
    for (int a = 0; a < inst_.num_arcs() && frac < 0; ++a) {
      if (!IsIntegral(lp_result.x[a])) frac = a;
    }
    if (frac < 0) {
      best_x = lp_result.x;
      best_value = lp_result.objective;
      return;
    }
    result_.fallback_used = true;
    const LpVariable saved = node.variable(frac);
    Rational floor_v = Floor(lp_result.x[frac]);
    for (int side = 0; side < 2; ++side) {
      RationalLP child = node;
      if (side == 0) {
        child.SetBounds(frac, saved.lower, floor_v);
      } else {
        child.SetBounds(frac, floor_v + 1, saved.upper);
      }
      LpResult child_result;
      if (CloseNode(child, child_result)) {
        Branch(child, child_result, best_x, best_value);
      }
    }
  }

  void Finish(RationalLP& lp) {
    if (options_.dump_lp) {
      SyncCuts(lp);
      result_.lp_text = lp.ToLpText();
    }
  }

  const Instance& inst_;
  CuttingPlaneOptions options_;
  RationalLP lp_;
  CuttingPlaneResult result_;
};

}  // namespace

CuttingPlaneResult SolvePrimalCuttingPlane(const Instance& inst,
                                           const CuttingPlaneOptions& options) {
  return CuttingPlane(inst, options).Run();
}

}  // namespace bbb
