#pragma once

#include <utility>
#include <vector>

#include "chilab/graph.hpp"

namespace chilab {

struct CliqueResult {
  int size = 0;
  VertexSet witness;
};

namespace clique_detail {

// Branch and bound over candidate bitsets; a greedy coloring of the
// candidates bounds how far the current clique can still grow.
class MaxCliqueSearch {
 public:
  explicit MaxCliqueSearch(const Graph& g) : g_(g) {}

  CliqueResult run() {
    best_ = CliqueResult{1, VertexSet::single(0)};
    expand(VertexSet{}, g_.vertices());
    return best_;
  }

 private:
  void expand(VertexSet current, VertexSet candidates) {
    std::vector<int> order;
    std::vector<int> bound;
    color_sort(candidates, order, bound);
    const int depth = current.size();
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (depth + bound[i] <= best_.size) return;
      const int v = order[i];
      VertexSet next = current;
      next.insert(v);
      const VertexSet remaining = candidates & g_.neighbors(v);
      if (remaining.empty()) {
        if (next.size() > best_.size) best_ = CliqueResult{next.size(), next};
      } else {
        expand(next, remaining);
      }
      candidates.erase(v);
    }
  }

  // Greedy sequential coloring of `candidates`; order lists vertices by
  // nondecreasing color and bound[i] is the color count up to order[i].
  void color_sort(VertexSet candidates, std::vector<int>& order, std::vector<int>& bound) const {
    order.reserve(candidates.size());
    bound.reserve(candidates.size());
    int color = 0;
    while (!candidates.empty()) {
      ++color;
      VertexSet open = candidates;
      while (!open.empty()) {
        const int v = open.first();
        open -= g_.neighbors(v);
        open.erase(v);
        candidates.erase(v);
        order.push_back(v);
        bound.push_back(color);
      }
    }
  }

  const Graph& g_;
  CliqueResult best_;
};

}  // namespace clique_detail

/// Exact clique number with a maximum clique as witness.
inline CliqueResult clique_number(const Graph& g) { return clique_detail::MaxCliqueSearch(g).run(); }

/// Exact independence number; equals the clique number of the complement.
inline CliqueResult independence_number(const Graph& g) { return clique_number(complement(g)); }

}  // namespace chilab
