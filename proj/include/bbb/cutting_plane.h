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

#ifndef BBB_CUTTING_PLANE_H_
#define BBB_CUTTING_PLANE_H_

#include <optional>
#include <string>
#include <vector>

#include "bbb/bibranch.h"
#include "bbb/bicut.h"
#include "bbb/simplex.h"

namespace bbb {

struct CuttingPlaneOptions {
  bool box = true;      // include x(a) <= 1
  bool dump_lp = false; // keep the final LP text
  int max_rounds = 10000;
};

struct CuttingPlaneResult {
  bool feasible = false;
  std::vector<Rational> x;
  Rational value;
  std::optional<Solution> solution;
  std::optional<InfeasibilityWitness> witness;
  // Every generated cut was violated by the iterate that produced it.
  std::vector<Bicut> cuts;
  std::vector<std::string> active_rows;
  int lp_solves = 0;
  int pivots = 0;
  // Branch-and-bound fired because a final vertex was fractional.
  bool fallback_used = false;
  std::string lp_text;
};

// Degree rows plus [0,1] bounds, then bicut rows until the separator finds
// nothing. Integral vertices are read off as the solution arc set.
CuttingPlaneResult SolvePrimalCuttingPlane(
    const Instance& inst, const CuttingPlaneOptions& options = {});

}  // namespace bbb

#endif  // BBB_CUTTING_PLANE_H_
