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

#include "bbb/solve.h"

#include "bbb/mflow.h"

namespace bbb {

const char* MethodName(Method m) {
  switch (m) {
    case Method::kLp:
      return "lp";
    case Method::kMflow:
      return "mflow";
    case Method::kBrute:
      return "brute";
    case Method::kAuto:
      return "auto";
  }
  return "?";
}

Method ParseMethod(const std::string& name) {
  for (Method m :
       {Method::kLp, Method::kMflow, Method::kBrute, Method::kAuto}) {
    if (name == MethodName(m)) return m;
  }
  throw InputError("unknown method '" + name + "'");
}

ShortestResult SolveShortest(const Instance& inst, Method method,
                             const CuttingPlaneOptions& options) {
  ShortestResult result;
  if (auto witness = FindInfeasibility(inst)) {
    result.witness = witness;
    return result;
  }
  auto record = [&result](Method m, Solution s) {
    result.values.push_back({m, s.weight});
    if (!result.solution) result.solution = std::move(s);
  };
  const bool all = method == Method::kAuto;
  if (method == Method::kLp || all) {
    CuttingPlaneResult lp = SolvePrimalCuttingPlane(inst, options);
    if (!lp.solution) throw TheoremViolation("LP found no solution");
    result.lp_solves = lp.lp_solves;
    result.cuts = static_cast<int>(lp.cuts.size());
    result.fallback_used = lp.fallback_used;
    result.lp_text = std::move(lp.lp_text);
    record(Method::kLp, std::move(*lp.solution));
  }
  if (method == Method::kMflow ||
      (all && inst.num_vertices() <= kMflowVertexLimit)) {
    MflowResult mf = SolveMflow(inst);
    if (!mf.solution) throw TheoremViolation("mflow found no solution");
    result.oracle_calls = mf.oracle_calls;
    result.cycles_canceled = mf.cycles_canceled;
    record(Method::kMflow, std::move(*mf.solution));
  }
  if (method == Method::kBrute ||
      (all && inst.num_arcs() <= kDefaultBruteForceArcLimit)) {
    std::optional<Solution> bf = BruteForceShortest(inst);
    if (!bf) throw TheoremViolation("brute force found no solution");
    record(Method::kBrute, std::move(*bf));
  }
  for (const MethodValue& mv : result.values) {
    if (mv.value != result.values.front().value) {
      throw TheoremViolation(std::string("methods disagree: ") +
                             MethodName(result.values.front().method) + " " +
                             ToString(result.values.front().value) + " vs " +
                             MethodName(mv.method) + " " + ToString(mv.value));
    }
  }
  return result;
}

}  // namespace bbb
