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

#ifndef BBB_MFLOW_H_
#define BBB_MFLOW_H_

#include <optional>
#include <vector>

#include "bbb/bibranch.h"
#include "bbb/graph.h"
#include "bbb/rational.h"

namespace bbb {

inline constexpr int kMflowVertexLimit = 8;

struct MflowResult {
  std::optional<Solution> solution;
  std::optional<InfeasibilityWitness> witness;
  // Cross arcs carrying flow at the end (supp xi).
  ArcSet flow;
  Rational objective;
  int iterations = 0;
  int cycles_canceled = 0;
  long oracle_calls = 0;
  // A negative cycle remained but none of them lowered the objective.
  bool stuck = false;
};

// Shortest b-bibranching through the flow formulation on the cross arcs:
// minimize w(xi) + g_S(out-boundary) + g_T(in-boundary) over 0/1 xi by
// canceling negative cycles of the exchange graph, starting at xi = 1.
// Every accepted cycle strictly lowers the exact objective. Throws
// GuardError above kMflowVertexLimit vertices.
MflowResult SolveMflow(const Instance& inst);

// w(xi) + g_S + g_T for the cross arcs in `flow`, or +infinity.
ExtRational MflowObjective(const Instance& inst, const ArcSet& flow);

}  // namespace bbb

#endif  // BBB_MFLOW_H_
