#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chilab/clique.hpp"
#include "chilab/coloring.hpp"
#include "chilab/connectivity.hpp"
#include "chilab/excess.hpp"
#include "chilab/graph.hpp"

namespace chilab {

struct InvariantWitnesses {
  std::vector<int> coloring;
  VertexSet clique;
  VertexSet independent;
  /// Minimum vertex cut of the complement; empty when the complement is
  /// disconnected, absent when it is complete.
  std::optional<VertexSet> complement_cut;
  std::optional<VertexSet> excess;

  bool operator==(const InvariantWitnesses&) const = default;
};

/// Every exact quantity the bounds consume, for one graph.
struct InvariantReport {
  int n = 0;
  int max_degree = 0;
  int chromatic = 0;
  int clique = 0;
  int independence = 0;
  /// Vertex connectivity of the complement.
  int kappa_bar = 0;
  /// Minimum degree of the complement, n - 1 - max_degree.
  int delta_bar = 0;
  std::optional<int> excess;
  InvariantWitnesses witnesses;

  bool operator==(const InvariantReport&) const = default;
};

inline InvariantReport invariant_report(const Graph& g, bool with_excess) {
  InvariantReport r;
  r.n = g.order();
  r.max_degree = g.max_degree();
  r.delta_bar = r.n - 1 - r.max_degree;

  ColoringResult coloring = chromatic_number(g);
  r.chromatic = coloring.colors;
  r.witnesses.coloring = std::move(coloring.coloring);

  const CliqueResult clique = clique_number(g);
  r.clique = clique.size;
  r.witnesses.clique = clique.witness;

  const Graph co = complement(g);
  const CliqueResult independent = clique_number(co);
  r.independence = independent.size;
  r.witnesses.independent = independent.witness;

  const ConnectivityResult kappa = vertex_connectivity(co);
  r.kappa_bar = kappa.kappa;
  r.witnesses.complement_cut = kappa.cut;

  if (with_excess) {
    const ExcessResult eta = chromatic_excess(g, r.chromatic, r.independence, r.witnesses.independent);
    r.excess = eta.excess;
    r.witnesses.excess = eta.witness;
  }
  return r;
}

/// Re-checks every value and witness of `r` against its definition using
/// direct checks only. Returns one message per failure.
inline std::vector<std::string> certify(const Graph& g, const InvariantReport& r) {
  std::vector<std::string> failures;
  auto expect = [&](bool ok, const char* what) {
    if (!ok) failures.emplace_back(what);
  };
  const auto& w = r.witnesses;
  expect(r.n == g.order(), "order mismatch");
  expect(r.max_degree == g.max_degree(), "max degree mismatch");
  expect(r.delta_bar == r.n - 1 - r.max_degree, "delta_bar != n - 1 - max_degree");
  expect(is_proper_coloring(g, w.coloring), "coloring witness is not proper");
  int used = 0;
  for (int c : w.coloring) used = std::max(used, c + 1);
  expect(used == r.chromatic, "coloring witness uses a different number of colors");
  expect(w.clique.size() == r.clique && g.is_clique(w.clique), "clique witness invalid");
  expect(w.independent.size() == r.independence && g.is_independent(w.independent), "independent witness invalid");
  expect(r.clique <= r.chromatic && r.chromatic <= r.max_degree + 1, "omega <= chi <= Delta + 1 violated");
  expect(r.chromatic * r.independence >= r.n, "chi >= n / alpha violated");
  expect(0 <= r.kappa_bar && r.kappa_bar <= r.n - 1, "kappa_bar out of range");

  const Graph co = complement(g);
  if (co.is_complete()) {
    expect(!w.complement_cut && r.kappa_bar == r.n - 1, "complete complement must report n - 1 and no cut");
  } else {
    expect(w.complement_cut.has_value(), "missing complement cut witness");
    if (w.complement_cut) {
      expect(w.complement_cut->size() == r.kappa_bar, "complement cut size differs from kappa_bar");
      expect(is_vertex_cut(co, *w.complement_cut), "complement cut does not disconnect the complement");
    }
  }

  if (r.excess) {
    expect(w.excess.has_value() && !w.excess->empty(), "missing excess witness");
    if (w.excess && !w.excess->empty()) {
      const int chi_h = chromatic_number(induced_subgraph(g, *w.excess)).colors;
      expect(w.excess->size() - 3 * chi_h == *r.excess, "excess witness does not attain the excess");
    }
  }
  return failures;
}

}  // namespace chilab
