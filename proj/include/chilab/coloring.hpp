#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "chilab/clique.hpp"
#include "chilab/graph.hpp"

namespace chilab {

struct ColoringResult {
  int colors = 0;
  /// color[v] in 0..colors-1
  std::vector<int> coloring;
};

inline bool is_proper_coloring(const Graph& g, const std::vector<int>& coloring) {
  if (static_cast<int>(coloring.size()) != g.order()) return false;
  for (int u = 0; u < g.order(); ++u) {
    if (coloring[u] < 0) return false;
    bool ok = true;
    g.neighbors(u).for_each([&](int v) { ok = ok && coloring[u] != coloring[v]; });
    if (!ok) return false;
  }
  return true;
}

/// Vertex sets of each color class, indexed by color.
inline std::vector<VertexSet> color_classes(const std::vector<int>& coloring) {
  std::vector<VertexSet> classes;
  for (int v = 0; v < static_cast<int>(coloring.size()); ++v) {
    if (coloring[v] >= static_cast<int>(classes.size())) classes.resize(coloring[v] + 1);
    classes[coloring[v]].insert(v);
  }
  return classes;
}

namespace coloring_detail {

// Exact DSATUR branch and bound. The search starts from a maximum clique
// precolored 0..omega-1 and a greedy DSATUR upper bound; it branches on the
// uncolored vertex of highest saturation (ties: most uncolored neighbors,
// then lowest index).
class DsaturSearch {
 public:
  explicit DsaturSearch(const Graph& g) : g_(g), n_(g.order()) {}

  ColoringResult run() {
    const CliqueResult clique = clique_number(g_);
    lower_ = clique.size;

    std::vector<int> color(n_, -1);
    std::vector<std::uint64_t> saturation(n_, 0);
    int used = 0;
    clique.witness.for_each([&](int v) { assign(v, used++, color, saturation); });

    best_ = greedy(color, saturation, used);
    if (best_.colors > lower_) search(color, saturation, used, n_ - clique.size);
    return best_;
  }

 private:
  void assign(int v, int c, std::vector<int>& color, std::vector<std::uint64_t>& saturation) const {
    color[v] = c;
    g_.neighbors(v).for_each([&](int u) { saturation[u] |= std::uint64_t{1} << c; });
  }

  int pick(const std::vector<int>& color, const std::vector<std::uint64_t>& saturation) const {
    int best = -1;
    int best_sat = -1;
    int best_deg = -1;
    for (int v = 0; v < n_; ++v) {
      if (color[v] >= 0) continue;
      const int sat = std::popcount(saturation[v]);
      int deg = 0;
      g_.neighbors(v).for_each([&](int u) { deg += color[u] < 0; });
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        best = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    return best;
  }

  ColoringResult greedy(std::vector<int> color, std::vector<std::uint64_t> saturation, int used) const {
    for (int v = pick(color, saturation); v >= 0; v = pick(color, saturation)) {
      const int c = std::countr_one(saturation[v]);
      assign(v, c, color, saturation);
      used = std::max(used, c + 1);
    }
    return ColoringResult{used, std::move(color)};
  }

  void search(std::vector<int>& color, std::vector<std::uint64_t>& saturation, int used, int uncolored) {
    if (done_ || used >= best_.colors) return;
    if (uncolored == 0) {
      best_ = ColoringResult{used, color};
      done_ = used == lower_;
      return;
    }
    const int v = pick(color, saturation);
    for (int c = 0; c <= used && c < best_.colors - 1 && !done_; ++c) {
      if ((saturation[v] >> c) & 1U) continue;
      std::vector<std::uint64_t> saved = saturation;
      assign(v, c, color, saturation);
      search(color, saturation, std::max(used, c + 1), uncolored - 1);
      color[v] = -1;
      saturation = std::move(saved);
    }
  }

  const Graph& g_;
  int n_;
  int lower_ = 1;
  bool done_ = false;
  ColoringResult best_;
};

}  // namespace coloring_detail

/// Exact chromatic number with an optimal proper coloring.
inline ColoringResult chromatic_number(const Graph& g) { return coloring_detail::DsaturSearch(g).run(); }

}  // namespace chilab
