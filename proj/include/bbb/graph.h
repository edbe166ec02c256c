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

#ifndef BBB_GRAPH_H_
#define BBB_GRAPH_H_

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace bbb {

// Indicator set over a dense index range [0, universe). VertexSet and ArcSet
// are distinct instantiations so they cannot be mixed up.
template <typename Tag>
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(int universe) : bits_(universe, false) {}
  IndexSet(int universe, std::initializer_list<int> members)
      : bits_(universe, false) {
    for (int i : members) Insert(i);
  }
  static IndexSet Full(int universe) {
    IndexSet s(universe);
    s.bits_.assign(universe, true);
    return s;
  }
  static IndexSet FromMask(int universe, uint64_t mask) {
    IndexSet s(universe);
    for (int i = 0; i < universe; ++i) s.bits_[i] = (mask >> i) & 1;
    return s;
  }
  static IndexSet FromMembers(int universe, const std::vector<int>& members) {
    IndexSet s(universe);
    for (int i : members) s.Insert(i);
    return s;
  }

  int universe() const { return static_cast<int>(bits_.size()); }
  bool Contains(int i) const { return bits_[i]; }
  void Insert(int i) { bits_[i] = true; }
  void Erase(int i) { bits_[i] = false; }
  void Set(int i, bool value) { bits_[i] = value; }

  int Size() const {
    int n = 0;
    for (bool b : bits_) n += b;
    return n;
  }
  bool Empty() const { return Size() == 0; }

  std::vector<int> Members() const {
    std::vector<int> out;
    for (int i = 0; i < universe(); ++i) {
      if (bits_[i]) out.push_back(i);
    }
    return out;
  }

  // Requires universe() <= 64.
  uint64_t Mask() const {
    uint64_t m = 0;
    for (int i = 0; i < universe(); ++i) {
      if (bits_[i]) m |= uint64_t{1} << i;
    }
    return m;
  }

  IndexSet Complement() const {
    IndexSet s(universe());
    for (int i = 0; i < universe(); ++i) s.bits_[i] = !bits_[i];
    return s;
  }
  IndexSet Union(const IndexSet& o) const {
    IndexSet s(universe());
    for (int i = 0; i < universe(); ++i) s.bits_[i] = bits_[i] || o.bits_[i];
    return s;
  }
  IndexSet Intersection(const IndexSet& o) const {
    IndexSet s(universe());
    for (int i = 0; i < universe(); ++i) s.bits_[i] = bits_[i] && o.bits_[i];
    return s;
  }
  IndexSet Minus(const IndexSet& o) const {
    IndexSet s(universe());
    for (int i = 0; i < universe(); ++i) s.bits_[i] = bits_[i] && !o.bits_[i];
    return s;
  }
  bool IsSubsetOf(const IndexSet& o) const {
    for (int i = 0; i < universe(); ++i) {
      if (bits_[i] && !o.bits_[i]) return false;
    }
    return true;
  }
  bool Intersects(const IndexSet& o) const {
    for (int i = 0; i < universe(); ++i) {
      if (bits_[i] && o.bits_[i]) return true;
    }
    return false;
  }

  friend bool operator==(const IndexSet&, const IndexSet&) = default;
  friend auto operator<=>(const IndexSet& a, const IndexSet& b) {
    return a.bits_ <=> b.bits_;
  }

 private:
  std::vector<bool> bits_;
};

struct VertexTag {};
struct ArcTag {};
using VertexSet = IndexSet<VertexTag>;
using ArcSet = IndexSet<ArcTag>;

// Per-vertex integer data: capacities b, indegree prescriptions, arguments
// of f and g. Indexed by dense vertex index.
using DegreeVector = std::vector<int>;

struct Arc {
  int tail;
  int head;
};

// Loopless digraph with parallel arcs. Vertices carry opaque string ids and
// are numbered densely in insertion order; arc indices never change.
class Digraph {
 public:
  Digraph() = default;

  // Throws InputError on a duplicate id.
  int AddVertex(std::string id);
  // Throws InputError on a loop or an out-of-range endpoint.
  int AddArc(int tail, int head);
  int AddArc(std::string_view tail, std::string_view head);

  int num_vertices() const { return static_cast<int>(ids_.size()); }
  int num_arcs() const { return static_cast<int>(arcs_.size()); }
  const Arc& arc(int a) const { return arcs_[a]; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const std::string& vertex_id(int v) const { return ids_[v]; }
  // Throws InputError on an unknown id.
  int VertexIndex(std::string_view id) const;
  bool HasVertex(std::string_view id) const;

  const std::vector<int>& in_arcs(int v) const { return in_[v]; }
  const std::vector<int>& out_arcs(int v) const { return out_[v]; }

  VertexSet NoVertices() const { return VertexSet(num_vertices()); }
  VertexSet AllVertices() const { return VertexSet::Full(num_vertices()); }
  ArcSet NoArcs() const { return ArcSet(num_arcs()); }
  ArcSet AllArcs() const { return ArcSet::Full(num_arcs()); }

  // Same vertices, every arc reversed, arc indices preserved.
  Digraph Reversed() const;

 private:
  std::vector<std::string> ids_;
  std::unordered_map<std::string, int> index_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> in_;
  std::vector<std::vector<int>> out_;
};

// D[X] together with the maps back into the parent digraph.
struct SubDigraph {
  Digraph graph;
  std::vector<int> parent_vertex;  // sub vertex -> parent vertex
  std::vector<int> parent_arc;     // sub arc -> parent arc
  std::vector<int> sub_vertex;     // parent vertex -> sub vertex or -1
};

SubDigraph InducedSubgraph(const Digraph& d, const VertexSet& x);

// B[X]: arcs of B with both ends in X.
ArcSet InducedArcs(const Digraph& d, const ArcSet& b, const VertexSet& x);
// B[X,Y]: arcs of B with tail in X and head in Y.
ArcSet ArcsBetween(const Digraph& d, const ArcSet& b, const VertexSet& x,
                   const VertexSet& y);

// delta^-_B(X) and delta^+_B(X). Throw InputError unless 0 < |X| < |V|.
ArcSet InCut(const Digraph& d, const ArcSet& b, const VertexSet& x);
ArcSet OutCut(const Digraph& d, const ArcSet& b, const VertexSet& x);
int InCutSize(const Digraph& d, const ArcSet& b, const VertexSet& x);
int OutCutSize(const Digraph& d, const ArcSet& b, const VertexSet& x);

DegreeVector InDegrees(const Digraph& d, const ArcSet& b);
DegreeVector OutDegrees(const Digraph& d, const ArcSet& b);

// Vertices reachable from X in (V, B), X included.
VertexSet ReachableFrom(const Digraph& d, const ArcSet& b, const VertexSet& x);

struct StrongComponent {
  VertexSet vertices;
  // No arc of the considered arc set enters the component.
  bool is_source;
};

// Strong components of (V, B) in order of their smallest vertex.
std::vector<StrongComponent> StrongComponents(const Digraph& d,
                                              const ArcSet& b);
inline std::vector<StrongComponent> StrongComponents(const Digraph& d) {
  return StrongComponents(d, d.AllArcs());
}

// Throws InputError if the set does not belong to d.
void CheckVertexSet(const Digraph& d, const VertexSet& x);
void CheckArcSet(const Digraph& d, const ArcSet& b);

}  // namespace bbb

#endif  // BBB_GRAPH_H_
