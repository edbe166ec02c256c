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

#ifndef BBB_SOLVE_H_
#define BBB_SOLVE_H_

#include <optional>
#include <string>
#include <vector>

#include "bbb/bibranch.h"
#include "bbb/cutting_plane.h"

namespace bbb {

enum class Method { kLp, kMflow, kBrute, kAuto };

const char* MethodName(Method m);
// Throws InputError on an unknown name.
Method ParseMethod(const std::string& name);

struct MethodValue {
  Method method;
  Rational value;
};

struct ShortestResult {
  std::optional<Solution> solution;
  std::optional<InfeasibilityWitness> witness;
  // The value found by each method that ran; all equal when solution is set.
  std::vector<MethodValue> values;
  // Trace counters of the methods that ran.
  int lp_solves = 0;
  int cuts = 0;
  bool fallback_used = false;
  long oracle_calls = 0;
  int cycles_canceled = 0;
  std::string lp_text;
};

// Infeasibility is decided up front from the full arc set. kAuto runs the
// LP, then mflow and brute force when their guards allow, and throws
// TheoremViolation if any two values differ.
ShortestResult SolveShortest(const Instance& inst, Method method,
                             const CuttingPlaneOptions& options = {});

}  // namespace bbb

#endif  // BBB_SOLVE_H_
