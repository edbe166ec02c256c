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

#ifndef BBB_GENERATOR_H_
#define BBB_GENERATOR_H_

#include <cstdint>

#include "bbb/bibranch.h"

namespace bbb {

struct GenParams {
  uint64_t seed = 1;
  int num_s = 2;
  int num_t = 2;
  double arc_density = 0.5;
  int bmax = 1;
  int wmax = 9;
};

// Each eligible ordered pair (S to S, T to T, S to T, never a loop) becomes
// an arc with probability arc_density. b uniform in [1, bmax], weights
// uniform integers in [0, wmax]. Ids are s0.. and t0... May be infeasible.
Instance GenerateInstance(const GenParams& params);

// Number of eligible ordered pairs for the given side sizes.
long EligiblePairs(int num_s, int num_t);

struct CorpusParams {
  int min_vertices = 2;
  int max_vertices = 6;
  int max_arcs = 14;
  int bmax = 3;
  int wmax = 9;
  bool unit_b = false;
  bool bipartite = false;  // only S to T arcs
  bool single_source = false;  // |S| = 1
};

// Arcs first (parallel arcs allowed), then each b(v) drawn in
// [1, min(bmax, d(v))] with d the relevant degree, so most draws are
// feasible. Deterministic in the seed.
Instance GenerateCorpusInstance(uint64_t seed, const CorpusParams& params);

}  // namespace bbb

#endif  // BBB_GENERATOR_H_
