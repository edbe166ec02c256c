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

#ifndef BBB_BICUT_H_
#define BBB_BICUT_H_

#include <optional>
#include <vector>

#include "bbb/bibranch.h"
#include "bbb/rational.h"

namespace bbb {

// C = delta^-(U) with U nonempty inside T, or T inside U inside V properly.
struct Bicut {
  VertexSet u;
  ArcSet arcs;
  Rational value;  // x(C) at the point it was evaluated for
};

bool IsBicutSet(const Instance& inst, const VertexSet& u);

// Every eligible U in increasing mask order. Throws GuardError for |V| > 20.
std::vector<VertexSet> EnumerateBicutSets(const Instance& inst);

Bicut MakeBicut(const Instance& inst, const VertexSet& u,
                const std::vector<Rational>& x);

// Minimum of x(delta^-(U)) over all bicut sets, by one max-flow per forced
// vertex: each t in T for the U-inside-T shape, each s in S for the
// complementary one. Ties keep the first cut found. x >= 0 required.
Bicut MinBicut(const Instance& inst, const std::vector<Rational>& x);

// A bicut with x(C) < 1, or nullopt.
std::optional<Bicut> SeparateBicut(const Instance& inst,
                                   const std::vector<Rational>& x);

}  // namespace bbb

#endif  // BBB_BICUT_H_
