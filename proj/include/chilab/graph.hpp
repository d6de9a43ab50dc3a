#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chilab/vertex_set.hpp"

namespace chilab {

/// Raised when an operation's domain excludes its argument, e.g. an empty
/// induced subgraph.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Finite simple undirected graph on vertices 0..n-1 with 1 <= n <= 62.
/// Immutable once built; use GraphBuilder to construct one edge at a time.
class Graph {
 public:
  /// Edgeless graph on n vertices.
  explicit Graph(int n) : adj_(check_order(n)) {}

  /// Builds from adjacency rows. Rows must be symmetric and loop-free.
  explicit Graph(std::vector<VertexSet> rows) : adj_(std::move(rows)) {
    const int n = check_order(static_cast<int>(adj_.size()));
    const VertexSet all = VertexSet::range(n);
    for (int v = 0; v < n; ++v) {
      if (adj_[v].contains(v)) throw DomainError("self-loop at vertex " + std::to_string(v));
      if (!adj_[v].is_subset_of(all)) throw DomainError("neighbor index out of range at vertex " + std::to_string(v));
      adj_[v].for_each([&](int u) {
        if (!adj_[u].contains(v))
          throw DomainError("asymmetric adjacency between " + std::to_string(v) + " and " + std::to_string(u));
      });
    }
  }

  static Graph complete(int n) {
    std::vector<VertexSet> rows(check_order(n));
    for (int v = 0; v < n; ++v) rows[v] = VertexSet::range(n) - VertexSet::single(v);
    return Graph(std::move(rows));
  }

  static Graph cycle(int n) {
    if (n < 3) throw DomainError("cycle needs at least 3 vertices");
    std::vector<VertexSet> rows(n);
    for (int v = 0; v < n; ++v) {
      rows[v].insert((v + 1) % n);
      rows[v].insert((v + n - 1) % n);
    }
    return Graph(std::move(rows));
  }

  static Graph path(int n) {
    std::vector<VertexSet> rows(check_order(n));
    for (int v = 0; v + 1 < n; ++v) {
      rows[v].insert(v + 1);
      rows[v + 1].insert(v);
    }
    return Graph(std::move(rows));
  }

  /// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
  static Graph petersen() {
    std::vector<VertexSet> rows(10);
    auto link = [&](int a, int b) {
      rows[a].insert(b);
      rows[b].insert(a);
    };
    for (int i = 0; i < 5; ++i) {
      link(i, (i + 1) % 5);
      link(5 + i, 5 + (i + 2) % 5);
      link(i, i + 5);
    }
    return Graph(std::move(rows));
  }

  int order() const { return static_cast<int>(adj_.size()); }
  VertexSet vertices() const { return VertexSet::range(order()); }
  VertexSet neighbors(int v) const { return adj_[v]; }
  bool adjacent(int u, int v) const { return adj_[u].contains(v); }
  int degree(int v) const { return adj_[v].size(); }

  int max_degree() const {
    int best = 0;
    for (const auto& row : adj_) best = std::max(best, row.size());
    return best;
  }

  int edge_count() const {
    int twice = 0;
    for (const auto& row : adj_) twice += row.size();
    return twice / 2;
  }

  bool is_complete() const { return 2 * edge_count() == order() * (order() - 1); }

  bool is_independent(VertexSet s) const {
    bool ok = true;
    s.for_each([&](int v) { ok = ok && !adj_[v].intersects(s); });
    return ok;
  }

  bool is_clique(VertexSet s) const {
    bool ok = true;
    s.for_each([&](int v) { ok = ok && (s - VertexSet::single(v)).is_subset_of(adj_[v]); });
    return ok;
  }

  /// Connected components of the subgraph induced by `within`, counted
  /// by bitset flood fill.
  int component_count(VertexSet within) const {
    int count = 0;
    VertexSet left = within;
    while (!left.empty()) {
      VertexSet frontier = VertexSet::single(left.first());
      VertexSet seen = frontier;
      while (!frontier.empty()) {
        VertexSet next;
        frontier.for_each([&](int v) { next |= adj_[v]; });
        next = (next & within) - seen;
        seen |= next;
        frontier = next;
      }
      left -= seen;
      ++count;
    }
    return count;
  }

  int component_count() const { return component_count(vertices()); }
  bool is_connected() const { return component_count() == 1; }

  const std::vector<VertexSet>& rows() const { return adj_; }

  bool operator==(const Graph&) const = default;

 private:
  static int check_order(int n) {
    if (n < 1) throw DomainError("graph must have at least one vertex");
    if (n > kMaxVertices) throw DomainError("graphs with more than 62 vertices are unsupported");
    return n;
  }

  std::vector<VertexSet> adj_;
};

/// Mutable edge-by-edge construction of a Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n) : rows_(Graph(n).rows()) {}

  GraphBuilder& add_edge(int u, int v) {
    const int n = static_cast<int>(rows_.size());
    if (u == v || u < 0 || v < 0 || u >= n || v >= n)
      throw DomainError("invalid edge " + std::to_string(u) + "-" + std::to_string(v));
    rows_[u].insert(v);
    rows_[v].insert(u);
    return *this;
  }

  Graph build() const { return Graph(rows_); }

 private:
  std::vector<VertexSet> rows_;
};

/// Graph on the same vertices with exactly the non-edges of g.
inline Graph complement(const Graph& g) {
  const VertexSet all = g.vertices();
  std::vector<VertexSet> rows(g.order());
  for (int v = 0; v < g.order(); ++v) rows[v] = all - g.neighbors(v) - VertexSet::single(v);
  return Graph(std::move(rows));
}

/// Subgraph induced by s, relabeled 0..|s|-1 in ascending original order.
inline Graph induced_subgraph(const Graph& g, VertexSet s) {
  if (s.empty()) throw DomainError("induced subgraph of an empty vertex set");
  if (!s.is_subset_of(g.vertices())) throw DomainError("vertex set exceeds graph order");
  const std::vector<int> members = s.to_vector();
  std::vector<VertexSet> rows(members.size());
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = 0; j < members.size(); ++j)
      if (g.adjacent(members[i], members[j])) rows[i].insert(static_cast<int>(j));
  return Graph(std::move(rows));
}

/// Maps a vertex set of induced_subgraph(g, host) back to g's labels.
inline VertexSet lift(VertexSet host, VertexSet local) {
  const std::vector<int> members = host.to_vector();
  VertexSet out;
  local.for_each([&](int i) { out.insert(members[i]); });
  return out;
}

}  // namespace chilab
