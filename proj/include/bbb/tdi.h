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

#ifndef BBB_TDI_H_
#define BBB_TDI_H_

#include <string>
#include <vector>

#include "bbb/bibranch.h"
#include "bbb/rational.h"

namespace bbb {

inline constexpr int kTdiVertexLimit = 10;
inline constexpr int kTdiNodeLimit = 20000;

// Index family of the dual: all singletons, then U inside T with |U| >= 2,
// then U containing T with |V - U| >= 2, each in increasing mask order and
// without repeats.
std::vector<VertexSet> DualIndexFamily(const Instance& inst);

struct DualSolution {
  std::vector<VertexSet> family;
  std::vector<Rational> y;  // parallel to family
  std::vector<Rational> z;  // box duals, empty for the unboxed system
  Rational objective;
};

// Objective sum b(v)y(v) + sum y(U) - sum z(a).
Rational DualObjective(const Instance& inst, const DualSolution& dual);

// First arc whose dual row is violated, or -1. Also checks y, z >= 0.
int FirstViolatedDualRow(const Instance& inst, const DualSolution& dual);

struct TdiSystemReport {
  bool boxed = false;
  bool primal_feasible = false;
  Rational primal_value;
  Rational dual_lp_value;
  bool strong_duality = false;
  bool integral_dual_found = false;
  DualSolution integral_dual;
  int nodes = 0;
  bool passed = false;
  std::string note;
};

struct TdiReport {
  TdiSystemReport unboxed;
  TdiSystemReport boxed;
  bool passed = false;
};

// Solves the primal over every bicut explicitly, the dual over the whole
// index family, then searches the optimal dual face for an integral point
// by branch-and-bound. The face search prefers duals with small
// sum y(U)|U||V - U|. Needs integer weights and |V| <= kTdiVertexLimit.
TdiReport TdiSpotCheck(const Instance& inst);

}  // namespace bbb

#endif  // BBB_TDI_H_
