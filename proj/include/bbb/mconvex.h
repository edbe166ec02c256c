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

#ifndef BBB_MCONVEX_H_
#define BBB_MCONVEX_H_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bbb/bibranch.h"
#include "bbb/graph.h"
#include "bbb/rational.h"

namespace bbb {

enum class OracleSide { kTBranching, kSCobranching };

// f(x) = min w(B) over b-branchings with d^-_B + x = b, and
// g(x) = the same with >=, evaluated through f(min(x, b)). Values are
// memoized. The side constructor works on D[T], or on D[S] reversed so that
// cobranchings become branchings.
class BBranchingOracle {
 public:
  BBranchingOracle(Digraph d, DegreeVector b, std::vector<Rational> weights);
  static BBranchingOracle ForSide(const Instance& inst, OracleSide side);

  int dimension() const { return graph_.num_vertices(); }
  const Digraph& digraph() const { return graph_; }
  const DegreeVector& capacity() const { return b_; }
  // Instance vertex / arc behind each local one (identity when built from
  // a plain digraph).
  const std::vector<int>& parent_vertex() const { return parent_vertex_; }
  const std::vector<int>& parent_arc() const { return parent_arc_; }

  ExtRational EvalF(const DegreeVector& x);
  ExtRational EvalG(const DegreeVector& x);
  // A minimizer in local arc indices, or nullopt outside the domain.
  std::optional<ArcSet> ArgminF(const DegreeVector& x);
  std::optional<ArcSet> ArgminG(const DegreeVector& x);

  long oracle_calls() const { return calls_; }

 private:
  struct Entry {
    ExtRational value;
    std::optional<ArcSet> arcs;
  };
  const Entry& Lookup(const DegreeVector& x);
  DegreeVector Clip(const DegreeVector& x) const;

  Digraph graph_;
  DegreeVector b_;
  std::vector<Rational> w_;
  std::vector<int> parent_vertex_;
  std::vector<int> parent_arc_;
  std::map<DegreeVector, Entry> memo_;
  long calls_ = 0;
};

// Enumeration oracles over all arc subsets (|A| <= 20).
ExtRational BruteForceF(const Digraph& d, const DegreeVector& b,
                        const std::vector<Rational>& w, const DegreeVector& x);
ExtRational BruteForceG(const Digraph& d, const DegreeVector& b,
                        const std::vector<Rational>& w, const DegreeVector& x);

using Evaluator = std::function<ExtRational(const DegreeVector&)>;

struct MnatFailure {
  DegreeVector x, y;
  int u = -1;
};

// For every u with x(u) > y(u): f(x)+f(y) >= f(x-e_u)+f(y+e_u), or some v
// with x(v) < y(v) has f(x)+f(y) >= f(x-e_u+e_v)+f(y+e_u-e_v). Needs x, y
// in the domain. `triples` counts the u checked.
std::optional<MnatFailure> CheckMnatPair(const Evaluator& f,
                                         const DegreeVector& x,
                                         const DegreeVector& y,
                                         long* triples = nullptr);

struct MnatReport {
  long triples = 0;
  long pairs = 0;
  std::optional<MnatFailure> failure;
  bool passed() const { return !failure.has_value(); }
};

// Samples x, y uniformly from the box [0, upper] until both are finite and
// checks each pair, stopping after `trials` triples or at the first
// failure. Deterministic in the seed.
MnatReport CheckMnatExchange(const Evaluator& f, const DegreeVector& upper,
                             uint64_t seed, long trials);

struct TwoPartitionResult {
  bool feasible = false;
  ArcSet b1, b2;
  // Source component where b1' or b2' reaches b.
  std::optional<VertexSet> witness;
};

// Splits A into b-branchings with indegrees b1' and b2' exactly. A must
// already split into two b-branchings, and b1' + b2' = d^-_A with
// 0 <= b_i' <= b (InputError otherwise). Decided by the source-component
// test; the split itself by the prescribed packing search. Arcs sharing a
// `copy_group` value go to different sides.
TwoPartitionResult TwoPartition(const Digraph& d, const DegreeVector& b,
                                const DegreeVector& b1, const DegreeVector& b2,
                                const std::vector<int>* copy_group = nullptr);

// Whether A splits into two b-branchings at all, by search.
std::optional<std::pair<ArcSet, ArcSet>> SplitIntoTwoBBranchings(
    const Digraph& d, const DegreeVector& b);

// Enumerates all 2^|A| splits (|A| <= 20).
bool BruteForceTwoPartitionExists(const Digraph& d, const DegreeVector& b,
                                  const DegreeVector& b1,
                                  const DegreeVector& b2);

struct ExchangeResult {
  ArcSet b1, b2;
  char which_case = 'a';
  std::optional<int> t;
};

// The exchange step for b-branchings B1, B2 with d^-_{B1}(s) < d^-_{B2}(s).
// Works in the multigraph B1 + B2 (shared arcs doubled, copies kept apart)
// and returns B1', B2' with the same union and intersection, degrees moved
// by e_s (case a) or by e_s - e_t (case b). Output is re-verified.
ExchangeResult ExchangeBBranchings(const Digraph& d, const DegreeVector& b,
                                   const ArcSet& b1, const ArcSet& b2, int s);

// The three conclusions, checked literally. Empty string when they hold.
std::string ExchangeConclusionError(const Digraph& d, const DegreeVector& b,
                                    const ArcSet& b1, const ArcSet& b2, int s,
                                    const ExchangeResult& result);

}  // namespace bbb

#endif  // BBB_MCONVEX_H_
