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

#include "bbb/mflow.h"

#include <algorithm>
#include <map>

#include "bbb/mconvex.h"

namespace bbb {
namespace {

constexpr int kMflowIterationLimit = 100000;

// Both side oracles plus the translation between instance vertices and
// the local vertex indices of each side.
class FlowObjective {
 public:
  explicit FlowObjective(const Instance& inst)
      : inst_(inst),
        t_(BBranchingOracle::ForSide(inst, OracleSide::kTBranching)),
        s_(BBranchingOracle::ForSide(inst, OracleSide::kSCobranching)),
        local_(inst.num_vertices(), -1) {
    for (int i = 0; i < t_.dimension(); ++i) local_[t_.parent_vertex()[i]] = i;
    for (int i = 0; i < s_.dimension(); ++i) local_[s_.parent_vertex()[i]] = i;
  }

  // z(u) = out-boundary on S, z(v) = -(in-boundary) on T.
  DegreeVector Boundary(const ArcSet& flow) const {
    DegreeVector z(inst_.num_vertices(), 0);
    for (int a : flow.Members()) {
      ++z[inst_.digraph().arc(a).tail];
      --z[inst_.digraph().arc(a).head];
    }
    return z;
  }

  // g_S(z_S) + g_T(-z_T).
  ExtRational Value(const DegreeVector& z) {
    DegreeVector xs(s_.dimension()), xt(t_.dimension());
    for (int v = 0; v < inst_.num_vertices(); ++v) {
      if (inst_.InS(v)) {
        xs[local_[v]] = z[v];
      } else {
        xt[local_[v]] = -z[v];
      }
    }
    return s_.EvalG(xs) + t_.EvalG(xt);
  }

  ExtRational Total(const ArcSet& flow) {
    Rational linear = WeightOf(inst_, flow);
    return ExtRational(linear) + Value(Boundary(flow));
  }

  // supp xi plus minimizers for both sides, in instance arc indices.
  ArcSet Assemble(const ArcSet& flow) {
    DegreeVector z = Boundary(flow);
    DegreeVector xs(s_.dimension()), xt(t_.dimension());
    for (int v = 0; v < inst_.num_vertices(); ++v) {
      if (inst_.InS(v)) {
        xs[local_[v]] = z[v];
      } else {
        xt[local_[v]] = -z[v];
      }
    }
    ArcSet arcs = flow;
    std::optional<ArcSet> bs = s_.ArgminG(xs), bt = t_.ArgminG(xt);
    if (!bs || !bt) throw TheoremViolation("final flow left the domain");
    for (int a : bs->Members()) arcs.Insert(s_.parent_arc()[a]);
    for (int a : bt->Members()) arcs.Insert(t_.parent_arc()[a]);
    return arcs;
  }

  long calls() const { return s_.oracle_calls() + t_.oracle_calls(); }

 private:
  const Instance& inst_;
  BBranchingOracle t_;
  BBranchingOracle s_;
  std::vector<int> local_;
};

struct AuxArc {
  Rational cost;
  // Cross arc flipped by this step, or -1 for a boundary exchange.
  int network = -1;
};

struct Cycle {
  Rational cost;
  std::vector<int> nodes;
};

class CycleFinder {
 public:
  CycleFinder(int n, const std::map<std::pair<int, int>, AuxArc>& arcs)
      : n_(n), arcs_(arcs), out_(n) {
    for (const auto& [pq, arc] : arcs_) out_[pq.first].push_back(pq.second);
  }

  // Every simple cycle of negative cost, each listed once from its lowest
  // node.
  std::vector<Cycle> Negative() {
    for (start_ = 0; start_ < n_; ++start_) {
      on_path_.assign(n_, false);
      path_ = {start_};
      on_path_[start_] = true;
      Extend(start_, Rational(0));
    }
    return std::move(found_);
  }

 private:
  void Extend(int u, const Rational& cost) {
    for (int v : out_[u]) {
      const Rational step = cost + arcs_.at({u, v}).cost;
      if (v == start_) {
        if (step < 0) found_.push_back({step, path_});
        continue;
      }
      if (v < start_ || on_path_[v]) continue;
      on_path_[v] = true;
      path_.push_back(v);
      Extend(v, step);
      path_.pop_back();
      on_path_[v] = false;
    }
  }

  int n_;
  const std::map<std::pair<int, int>, AuxArc>& arcs_;
  std::vector<std::vector<int>> out_;
  int start_ = 0;
  std::vector<bool> on_path_;
  std::vector<int> path_;
  std::vector<Cycle> found_;
};

}  // namespace

ExtRational MflowObjective(const Instance& inst, const ArcSet& flow) {
  return FlowObjective(inst).Total(flow);
}

MflowResult SolveMflow(const Instance& inst) {
  const int n = inst.num_vertices();
  if (n > kMflowVertexLimit) {
    throw GuardError("mflow cycle enumeration needs |V| <= " +
                     std::to_string(kMflowVertexLimit));
  }
  MflowResult result;
  result.flow = inst.CrossArcs();
  if (auto witness = FindInfeasibility(inst)) {
    result.witness = witness;
    return result;
  }
  FlowObjective phi(inst);
  ExtRational current = phi.Total(result.flow);
  if (current.is_infinite()) {
    throw TheoremViolation("full cross flow is outside the domain");
  }
  const std::vector<int> cross = inst.CrossArcs().Members();
  const int zero = n;  // the extra node for unbalanced moves
  while (true) {
    if (++result.iterations > kMflowIterationLimit) {
      throw GuardError("mflow iteration limit exceeded");
    }
    DegreeVector z = phi.Boundary(result.flow);
    const Rational fz = phi.Value(z).value();
    std::map<std::pair<int, int>, AuxArc> aux;
    auto offer = [&aux](int p, int q, AuxArc arc) {
      auto it = aux.find({p, q});
      if (it == aux.end() || arc.cost < it->second.cost) aux[{p, q}] = arc;
    };
    for (int a : cross) {
      const Arc& arc = inst.digraph().arc(a);
      if (result.flow.Contains(a)) {
        offer(arc.head, arc.tail, {-inst.weight(a), a});
      } else {
        offer(arc.tail, arc.head, {inst.weight(a), a});
      }
    }
    for (int p = 0; p <= n; ++p) {
      for (int q = 0; q <= n; ++q) {
        if (p == q) continue;
        DegreeVector moved = z;
        if (p != zero) --moved[p];
        if (q != zero) ++moved[q];
        ExtRational fm = phi.Value(moved);
        if (fm.is_finite()) offer(p, q, {fm.value() - fz, -1});
      }
    }
    std::vector<Cycle> cycles = CycleFinder(n + 1, aux).Negative();
    if (cycles.empty()) break;
    std::stable_sort(cycles.begin(), cycles.end(),
                     [](const Cycle& x, const Cycle& y) {
                       if (x.cost != y.cost) return x.cost < y.cost;
                       return x.nodes.size() < y.nodes.size();
                     });
    bool improved = false;
    for (const Cycle& cycle : cycles) {
      ArcSet next = result.flow;
      bool touches_flow = false;
      for (size_t i = 0; i < cycle.nodes.size(); ++i) {
        int p = cycle.nodes[i];
        int q = cycle.nodes[(i + 1) % cycle.nodes.size()];
        int a = aux.at({p, q}).network;
        if (a < 0) continue;
        touches_flow = true;
        next.Set(a, !next.Contains(a));
      }
      if (!touches_flow) continue;
      ExtRational value = phi.Total(next);
      if (value < current) {
        result.flow = next;
        current = value;
        ++result.cycles_canceled;
        improved = true;
        break;
      }
    }
    if (!improved) {
      result.stuck = true;
      break;
    }
  }
  result.objective = current.value();
  ArcSet arcs = phi.Assemble(result.flow);
  if (!IsBBibranching(inst, arcs)) {
    throw TheoremViolation("mflow assembly is not a b-bibranching");
  }
  Solution solution = MakeSolution(inst, arcs);
  if (solution.weight != result.objective) {
    throw TheoremViolation("mflow assembly weight differs from objective");
  }
  result.solution = std::move(solution);
  result.oracle_calls = phi.calls();
  return result;
}

}  // namespace bbb
