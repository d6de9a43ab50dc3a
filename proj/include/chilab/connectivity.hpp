#pragma once

#include <algorithm>
#include <limits>
#include <optional>
#include <vector>

#include "chilab/graph.hpp"

namespace chilab {

struct ConnectivityResult {
  int kappa = 0;
  /// Empty set for disconnected graphs; absent for complete graphs.
  std::optional<VertexSet> cut;
};

/// True iff removing `k` leaves at least two connected components.
inline bool is_vertex_cut(const Graph& g, VertexSet k) {
  return g.component_count(g.vertices() - k) >= 2;
}

namespace connectivity_detail {

// Unit-capacity max flow on the vertex-split digraph: v_in = 2v,
// v_out = 2v + 1, internal arc v_in -> v_out of capacity 1 (unbounded for
// the terminals), arcs u_out -> v_in for each edge.
class SplitFlow {
 public:
  explicit SplitFlow(const Graph& g) : g_(g), nodes_(2 * g.order()) {}

  // Max number of internally vertex-disjoint s-t paths, stopping once
  // `cap` is reached. On return cut_ holds a minimum separator when the
  // flow stayed below cap.
  int run(int s, int t, int cap) {
    capacity_.assign(static_cast<std::size_t>(nodes_) * nodes_, 0);
    constexpr int kInf = std::numeric_limits<int>::max() / 4;
    for (int v = 0; v < g_.order(); ++v) {
      at(2 * v, 2 * v + 1) = (v == s || v == t) ? kInf : 1;
      g_.neighbors(v).for_each([&](int u) { at(2 * v + 1, 2 * u) = kInf; });
    }
    const int source = 2 * s + 1;
    const int sink = 2 * t;
    int flow = 0;
    std::vector<int> parent(nodes_);
    while (flow < cap && augment(source, sink, parent)) ++flow;
    if (flow < cap) {
      // Residual reachability from the source marks the source side.
      std::vector<char> seen(nodes_, 0);
      reach(source, seen);
      cut_ = VertexSet{};
      for (int v = 0; v < g_.order(); ++v)
        if (seen[2 * v] && !seen[2 * v + 1]) cut_.insert(v);
    }
    return flow;
  }

  VertexSet cut() const { return cut_; }

 private:
  int& at(int a, int b) { return capacity_[static_cast<std::size_t>(a) * nodes_ + b]; }

  bool augment(int source, int sink, std::vector<int>& parent) {
    std::fill(parent.begin(), parent.end(), -1);
    parent[source] = source;
    std::vector<int> queue{source};
    for (std::size_t head = 0; head < queue.size() && parent[sink] < 0; ++head) {
      const int a = queue[head];
      for (int b = 0; b < nodes_; ++b) {
        if (parent[b] < 0 && at(a, b) > 0) {
          parent[b] = a;
          queue.push_back(b);
        }
      }
    }
    if (parent[sink] < 0) return false;
    for (int b = sink; b != source; b = parent[b]) {
      --at(parent[b], b);
      ++at(b, parent[b]);
    }
    return true;
  }

  void reach(int source, std::vector<char>& seen) {
    std::vector<int> stack{source};
    seen[source] = 1;
    while (!stack.empty()) {
      const int a = stack.back();
      stack.pop_back();
      for (int b = 0; b < nodes_; ++b) {
        if (!seen[b] && at(a, b) > 0) {
          seen[b] = 1;
          stack.push_back(b);
        }
      }
    }
  }

  const Graph& g_;
  int nodes_;
  std::vector<int> capacity_;
  VertexSet cut_;
};

}  // namespace connectivity_detail

/// Vertex connectivity by Menger's theorem: the minimum over non-adjacent
/// pairs of the number of internally disjoint paths. Complete graphs give
/// n - 1 with no cut; disconnected graphs give 0 with an empty cut.
inline ConnectivityResult vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (g.is_complete()) return ConnectivityResult{n - 1, std::nullopt};
  if (!g.is_connected()) return ConnectivityResult{0, VertexSet{}};

  connectivity_detail::SplitFlow flow(g);
  ConnectivityResult best{n - 1, std::nullopt};
  for (int s = 0; s < n; ++s) {
    for (int t = s + 1; t < n; ++t) {
      if (g.adjacent(s, t)) continue;
      const int k = flow.run(s, t, best.kappa);
      if (k < best.kappa) best = ConnectivityResult{k, flow.cut()};
    }
  }
  return best;
}

}  // namespace chilab
