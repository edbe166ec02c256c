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

#ifndef BBB_MAX_FLOW_H_
#define BBB_MAX_FLOW_H_

#include <algorithm>
#include <cassert>
#include <optional>
#include <queue>
#include <vector>

namespace bbb {

// Exact max-flow / min-cut by shortest augmenting paths (Edmonds-Karp).
// Cap is an exact ordered ring: int64_t for unit networks, Rational for
// fractional separation. Arcs may be marked infinite.
template <typename Cap>
class FlowNetwork {
 public:
  struct Result {
    // A source-sink path of infinite arcs exists; value and cut are unset.
    bool unbounded = false;
    Cap value{};
    // Nodes reachable from the source in the final residual graph.
    std::vector<bool> source_side;
  };

  explicit FlowNetwork(int num_nodes = 0) : adj_(num_nodes) {}

  int AddNode() {
    adj_.emplace_back();
    return static_cast<int>(adj_.size()) - 1;
  }
  int num_nodes() const { return static_cast<int>(adj_.size()); }

  int AddArc(int from, int to, Cap capacity) {
    return AddEdgePair(from, to, std::move(capacity), false);
  }
  int AddInfiniteArc(int from, int to) {
    return AddEdgePair(from, to, Cap{}, true);
  }

  Result Solve(int source, int sink) const {
    assert(source != sink);
    Result result;
    if (InfinitePathExists(source, sink)) {
      result.unbounded = true;
      return result;
    }
    std::vector<Edge> res = edges_;
    const int n = num_nodes();
    std::vector<int> parent_edge(n);
    while (true) {
      std::fill(parent_edge.begin(), parent_edge.end(), -1);
      std::vector<bool> seen(n, false);
      std::queue<int> queue;
      queue.push(source);
      seen[source] = true;
      while (!queue.empty() && !seen[sink]) {
        int u = queue.front();
        queue.pop();
        for (int e : adj_[u]) {
          const Edge& edge = res[e];
          if (seen[edge.to] || !(edge.infinite || edge.cap > 0)) continue;
          seen[edge.to] = true;
          parent_edge[edge.to] = e;
          queue.push(edge.to);
        }
      }
      if (!seen[sink]) {
        result.source_side = std::move(seen);
        break;
      }
      std::optional<Cap> bottleneck;
      for (int v = sink; v != source; v = res[parent_edge[v] ^ 1].to) {
        const Edge& edge = res[parent_edge[v]];
        if (!edge.infinite && (!bottleneck || edge.cap < *bottleneck)) {
          bottleneck = edge.cap;
        }
      }
      assert(bottleneck.has_value());
      for (int v = sink; v != source; v = res[parent_edge[v] ^ 1].to) {
        int e = parent_edge[v];
        if (!res[e].infinite) res[e].cap -= *bottleneck;
        if (!res[e ^ 1].infinite) res[e ^ 1].cap += *bottleneck;
      }
      result.value += *bottleneck;
    }
    return result;
  }

  // Total capacity of arcs leaving `side`. Infinite crossing arcs make the
  // cut infinite; that is reported by returning std::nullopt.
  std::optional<Cap> CutCapacity(const std::vector<bool>& side) const {
    Cap total{};
    for (size_t e = 0; e < edges_.size(); e += 2) {
      int from = edges_[e ^ 1].to, to = edges_[e].to;
      if (side[from] && !side[to]) {
        if (edges_[e].infinite) return std::nullopt;
        total += edges_[e].cap;
      }
    }
    return total;
  }

 private:
  struct Edge {
    int to;
    Cap cap;
    bool infinite;
  };

  int AddEdgePair(int from, int to, Cap capacity, bool infinite) {
    int id = static_cast<int>(edges_.size());
    edges_.push_back({to, std::move(capacity), infinite});
    edges_.push_back({from, Cap{}, false});
    adj_[from].push_back(id);
    adj_[to].push_back(id + 1);
    return id / 2;
  }

  bool InfinitePathExists(int source, int sink) const {
    std::vector<bool> seen(num_nodes(), false);
    std::vector<int> stack{source};
    seen[source] = true;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      if (u == sink) return true;
      for (int e : adj_[u]) {
        if ((e & 1) || !edges_[e].infinite || seen[edges_[e].to]) continue;
        seen[edges_[e].to] = true;
        stack.push_back(edges_[e].to);
      }
    }
    return false;
  }

  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

}  // namespace bbb

#endif  // BBB_MAX_FLOW_H_
