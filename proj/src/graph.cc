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

#include "bbb/graph.h"

#include <algorithm>
#include <functional>

#include "bbb/rational.h"

namespace bbb {

int Digraph::AddVertex(std::string id) {
  if (index_.count(id)) throw InputError("duplicate vertex id \"" + id + "\"");
  int v = num_vertices();
  index_.emplace(id, v);
  ids_.push_back(std::move(id));
  in_.emplace_back();
  out_.emplace_back();
  return v;
}

int Digraph::AddArc(int tail, int head) {
  if (tail < 0 || tail >= num_vertices() || head < 0 ||
      head >= num_vertices()) {
    throw InputError("arc endpoint out of range");
  }
  if (tail == head) {
    throw InputError("loop at vertex \"" + ids_[tail] + "\"");
  }
  int a = num_arcs();
  arcs_.push_back({tail, head});
  out_[tail].push_back(a);
  in_[head].push_back(a);
  return a;
}

int Digraph::AddArc(std::string_view tail, std::string_view head) {
  return AddArc(VertexIndex(tail), VertexIndex(head));
}

int Digraph::VertexIndex(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) {
    throw InputError("unknown vertex id \"" + std::string(id) + "\"");
  }
  return it->second;
}

bool Digraph::HasVertex(std::string_view id) const {
  return index_.count(std::string(id)) > 0;
}

Digraph Digraph::Reversed() const {
  Digraph r;
  for (const auto& id : ids_) r.AddVertex(id);
  for (const Arc& a : arcs_) r.AddArc(a.head, a.tail);
  return r;
}

void CheckVertexSet(const Digraph& d, const VertexSet& x) {
  if (x.universe() != d.num_vertices()) {
    throw InputError("vertex set does not belong to the digraph");
  }
}

void CheckArcSet(const Digraph& d, const ArcSet& b) {
  if (b.universe() != d.num_arcs()) {
    throw InputError("arc set does not belong to the digraph");
  }
}

SubDigraph InducedSubgraph(const Digraph& d, const VertexSet& x) {
  CheckVertexSet(d, x);
  SubDigraph sub;
  sub.sub_vertex.assign(d.num_vertices(), -1);
  for (int v : x.Members()) {
    sub.sub_vertex[v] = sub.graph.AddVertex(d.vertex_id(v));
    sub.parent_vertex.push_back(v);
  }
  for (int a = 0; a < d.num_arcs(); ++a) {
    const Arc& arc = d.arc(a);
    if (x.Contains(arc.tail) && x.Contains(arc.head)) {
      sub.graph.AddArc(sub.sub_vertex[arc.tail], sub.sub_vertex[arc.head]);
      sub.parent_arc.push_back(a);
    }
  }
  return sub;
}

ArcSet InducedArcs(const Digraph& d, const ArcSet& b, const VertexSet& x) {
  return ArcsBetween(d, b, x, x);
}

ArcSet ArcsBetween(const Digraph& d, const ArcSet& b, const VertexSet& x,
                   const VertexSet& y) {
  CheckArcSet(d, b);
  CheckVertexSet(d, x);
  CheckVertexSet(d, y);
  ArcSet out = d.NoArcs();
  for (int a = 0; a < d.num_arcs(); ++a) {
    if (b.Contains(a) && x.Contains(d.arc(a).tail) &&
        y.Contains(d.arc(a).head)) {
      out.Insert(a);
    }
  }
  return out;
}

namespace {

void CheckProperSubset(const Digraph& d, const VertexSet& x) {
  CheckVertexSet(d, x);
  int n = x.Size();
  if (n == 0 || n == d.num_vertices()) {
    throw InputError("cut requires a nonempty proper vertex subset");
  }
}

}  // namespace

ArcSet InCut(const Digraph& d, const ArcSet& b, const VertexSet& x) {
  CheckProperSubset(d, x);
  return ArcsBetween(d, b, x.Complement(), x);
}

ArcSet OutCut(const Digraph& d, const ArcSet& b, const VertexSet& x) {
  CheckProperSubset(d, x);
  return ArcsBetween(d, b, x, x.Complement());
}

int InCutSize(const Digraph& d, const ArcSet& b, const VertexSet& x) {
  return InCut(d, b, x).Size();
}

int OutCutSize(const Digraph& d, const ArcSet& b, const VertexSet& x) {
  return OutCut(d, b, x).Size();
}

DegreeVector InDegrees(const Digraph& d, const ArcSet& b) {
  CheckArcSet(d, b);
  DegreeVector deg(d.num_vertices(), 0);
  for (int a = 0; a < d.num_arcs(); ++a) {
    if (b.Contains(a)) ++deg[d.arc(a).head];
  }
  return deg;
}

DegreeVector OutDegrees(const Digraph& d, const ArcSet& b) {
  CheckArcSet(d, b);
  DegreeVector deg(d.num_vertices(), 0);
  for (int a = 0; a < d.num_arcs(); ++a) {
    if (b.Contains(a)) ++deg[d.arc(a).tail];
  }
  return deg;
}

VertexSet ReachableFrom(const Digraph& d, const ArcSet& b,
                        const VertexSet& x) {
  CheckArcSet(d, b);
  CheckVertexSet(d, x);
  VertexSet seen = x;
  std::vector<int> stack = x.Members();
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int a : d.out_arcs(v)) {
      if (!b.Contains(a)) continue;
      int h = d.arc(a).head;
      if (!seen.Contains(h)) {
        seen.Insert(h);
        stack.push_back(h);
      }
    }
  }
  return seen;
}

std::vector<StrongComponent> StrongComponents(const Digraph& d,
                                              const ArcSet& b) {
  CheckArcSet(d, b);
  const int n = d.num_vertices();
  // Tarjan.
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<bool> on_stack(n, false);
  std::vector<int> stack;
  int counter = 0, num_comps = 0;
  std::function<void(int)> visit = [&](int v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (int a : d.out_arcs(v)) {
      if (!b.Contains(a)) continue;
      int w = d.arc(a).head;
      if (index[w] < 0) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      int w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp[w] = num_comps;
      } while (w != v);
      ++num_comps;
    }
  };
  for (int v = 0; v < n; ++v) {
    if (index[v] < 0) visit(v);
  }

  // Renumber by smallest member.
  std::vector<int> order(num_comps, -1);
  int next = 0;
  for (int v = 0; v < n; ++v) {
    if (order[comp[v]] < 0) order[comp[v]] = next++;
  }
  std::vector<StrongComponent> out(num_comps, {VertexSet(n), true});
  for (int v = 0; v < n; ++v) out[order[comp[v]]].vertices.Insert(v);
  for (int a = 0; a < d.num_arcs(); ++a) {
    if (!b.Contains(a)) continue;
    int ct = order[comp[d.arc(a).tail]], ch = order[comp[d.arc(a).head]];
    if (ct != ch) out[ch].is_source = false;
  }
  return out;
}

}  // namespace bbb
