#pragma once

#include "chilab/clique.hpp"
#include "chilab/coloring.hpp"
#include "chilab/graph.hpp"

namespace chilab {

struct ExcessResult {
  int excess = 0;
  /// A non-empty vertex set H with |H| - 3 chi(G[H]) == excess.
  VertexSet witness;
};

/// Chromatic excess: max over non-empty induced subgraphs H of
/// |H| - 3 chi(H).
///
/// Sizes are scanned from n downward. Since chi(H) >= 1 no set of size s
/// can beat s - 3, so the scan stops once s - 3 <= best. A size is skipped
/// when s - 3 ceil(s / alpha(G)) <= best, because chi(H) >= |H| / alpha(H)
/// and alpha(H) <= alpha(G). The incumbent starts at the two extremal
/// candidates: H = G and a maximum independent set.
inline ExcessResult chromatic_excess(const Graph& g, int chi, int alpha, VertexSet max_independent) {
  const int n = g.order();
  ExcessResult best{n - 3 * chi, g.vertices()};
  if (alpha - 3 > best.excess) best = ExcessResult{alpha - 3, max_independent};

  for (int s = n - 1; s >= 1; --s) {
    if (s - 3 <= best.excess) break;
    if (s - 3 * ((s + alpha - 1) / alpha) <= best.excess) continue;
    for_each_subset_of_size(g.vertices(), s, [&](VertexSet h) {
      if (s - 3 <= best.excess) return;
      const int chi_h = chromatic_number(induced_subgraph(g, h)).colors;
      if (s - 3 * chi_h > best.excess) best = ExcessResult{s - 3 * chi_h, h};
    });
  }
  return best;
}

inline ExcessResult chromatic_excess(const Graph& g) {
  const CliqueResult independent = independence_number(g);
  return chromatic_excess(g, chromatic_number(g).colors, independent.size, independent.witness);
}

}  // namespace chilab
