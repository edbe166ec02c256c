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

#include "bbb/generator.h"

#include <algorithm>
#include <random>
#include <string>
#include <utility>

namespace bbb {
namespace {

std::vector<std::pair<int, int>> EligibleList(int num_s, int num_t,
                                              bool cross_only) {
  const int n = num_s + num_t;
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      bool u_s = u < num_s, v_s = v < num_s;
      if (!u_s && v_s) continue;  // T to S
      if (cross_only && u_s == v_s) continue;
      pairs.emplace_back(u, v);
    }
  }
  return pairs;
}

Digraph NamedVertices(int num_s, int num_t) {
  Digraph d;
  for (int i = 0; i < num_s; ++i) d.AddVertex("s" + std::to_string(i));
  for (int i = 0; i < num_t; ++i) d.AddVertex("t" + std::to_string(i));
  return d;
}

std::vector<Side> Sides(int num_s, int num_t) {
  std::vector<Side> side(num_s, Side::kS);
  side.insert(side.end(), num_t, Side::kT);
  return side;
}

}  // namespace

long EligiblePairs(int num_s, int num_t) {
  return 1L * num_s * (num_s - 1) + 1L * num_t * (num_t - 1) +
         1L * num_s * num_t;
}

Instance GenerateInstance(const GenParams& p) {
  if (p.num_s < 1 || p.num_t < 1) throw InputError("nS and nT must be >= 1");
  if (p.bmax < 1) throw InputError("bmax must be >= 1");
  if (p.wmax < 0) throw InputError("wmax must be >= 0");
  if (!(p.arc_density >= 0 && p.arc_density <= 1)) {
    throw InputError("arc density must lie in [0, 1]");
  }
  std::mt19937_64 rng(p.seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> weight(0, p.wmax);
  std::uniform_int_distribution<int> cap(1, p.bmax);
  Digraph d = NamedVertices(p.num_s, p.num_t);
  std::vector<Rational> w;
  for (const auto& [u, v] : EligibleList(p.num_s, p.num_t, false)) {
    if (coin(rng) < p.arc_density) {
      d.AddArc(u, v);
      w.push_back(weight(rng));
    }
  }
  DegreeVector b;
  for (int v = 0; v < d.num_vertices(); ++v) b.push_back(cap(rng));
  return Instance(std::move(d), Sides(p.num_s, p.num_t), std::move(b),
                  std::move(w));
}

Instance GenerateCorpusInstance(uint64_t seed, const CorpusParams& p) {
  std::mt19937_64 rng(seed);
  auto uniform = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  const int n = uniform(p.min_vertices, p.max_vertices);
  const int num_s = p.single_source ? 1 : uniform(1, n - 1);
  const int num_t = n - num_s;
  auto pairs = EligibleList(num_s, num_t, p.bipartite);
  Digraph d = NamedVertices(num_s, num_t);
  const int m = uniform(std::min(n, p.max_arcs), p.max_arcs);
  std::vector<Rational> w;
  for (int i = 0; i < m; ++i) {
    const auto& [u, v] = pairs[uniform(0, static_cast<int>(pairs.size()) - 1)];
    d.AddArc(u, v);
    w.push_back(uniform(0, p.wmax));
  }
  DegreeVector in = InDegrees(d, d.AllArcs());
  DegreeVector out = OutDegrees(d, d.AllArcs());
  DegreeVector b;
  for (int v = 0; v < n; ++v) {
    int deg = v < num_s ? out[v] : in[v];
    int hi = p.unit_b ? 1 : std::max(1, std::min(p.bmax, deg));
    b.push_back(uniform(1, hi));
  }
  return Instance(std::move(d), Sides(num_s, num_t), std::move(b),
                  std::move(w));
}

}  // namespace bbb
