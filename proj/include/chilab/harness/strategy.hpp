#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "chilab/bounds.hpp"
#include "chilab/coloring.hpp"
#include "chilab/connectivity.hpp"
#include "chilab/graph.hpp"
#include "chilab/invariants.hpp"

namespace chilab::harness {

enum class Strategy { heuristic, exhaustive };

/// Exhaustive plans enumerate every vertex subset.
inline constexpr int kExhaustiveStrategyGuard = 8;

inline Strategy parse_strategy(std::string_view s) {
  if (s == "heuristic") return Strategy::heuristic;
  if (s == "exhaustive") return Strategy::exhaustive;
  throw std::invalid_argument("unknown strategy '" + std::string(s) + "'");
}

/// Chromatic numbers of induced subgraphs, tabulated for every subset in
/// exhaustive mode and memoized otherwise.
class SubgraphChromatic {
 public:
  SubgraphChromatic(const Graph& g, bool tabulate) : g_(&g) {
    if (tabulate) {
      const std::uint64_t count = std::uint64_t{1} << g.order();
      table_.assign(count, 0);
      for (std::uint64_t s = 1; s < count; ++s)
        table_[s] = chromatic_number(induced_subgraph(g, VertexSet(s))).colors;
    }
  }

  int operator()(VertexSet s) {
    if (!table_.empty()) return table_[s.bits()];
    if (auto it = memo_.find(s); it != memo_.end()) return it->second;
    const int chi = chromatic_number(induced_subgraph(*g_, s)).colors;
    memo_.emplace(s, chi);
    return chi;
  }

 private:
  const Graph* g_;
  std::vector<int> table_;
  std::map<VertexSet, int> memo_;
};

/// Parameter choices for the bounds that quantify over H, K or families
/// of independent sets.
struct SubgraphPlan {
  /// Candidate H for prop3, prop4 and cor5.
  std::vector<VertexSet> subgraphs;
  /// Validated cuts K of the complement, for prop4 and cor6.
  std::vector<VertexSet> cuts;
  /// Families of disjoint independent sets for prop1.
  std::vector<std::vector<VertexSet>> independent_families;
};

namespace strategy_detail {

inline void push_unique(std::vector<VertexSet>& v, VertexSet s) {
  if (std::find(v.begin(), v.end(), s) == v.end()) v.push_back(s);
}

// Inclusion-minimal non-empty vertex sets whose removal leaves the
// complement with at least two components.
inline std::vector<VertexSet> minimal_complement_cuts(const Graph& g) {
  const Graph co = complement(g);
  const std::uint64_t count = std::uint64_t{1} << g.order();
  std::vector<char> cut(count, 0);
  std::vector<char> has_cut_below(count, 0);
  std::vector<VertexSet> out;
  for (std::uint64_t s = 1; s < count; ++s) cut[s] = is_vertex_cut(co, VertexSet(s));
  // Subsets are numerically smaller than their supersets, so one forward
  // pass settles has_cut_below.
  for (std::uint64_t s = 1; s < count; ++s) {
    bool below = false;
    for (auto b = s; b != 0 && !below; b &= b - 1) {
      const std::uint64_t sub = s & ~(b & -b);
      if (sub != 0) below = cut[sub] || has_cut_below[sub];
    }
    has_cut_below[s] = below;
    if (cut[s] && !below) out.push_back(VertexSet(s));
  }
  return out;
}

}  // namespace strategy_detail

/// heuristic: H in {G, a maximum independent set, the excess witness};
/// K = the minimum cut witness of the complement when it is a valid cut;
/// prop1 families {maximum independent set} and the optimal color classes.
///
/// exhaustive (n <= 8): every non-empty H; every inclusion-minimal
/// non-empty cut K of the complement; prop1 families: the color classes,
/// every single independent set and every pair of disjoint ones.
inline SubgraphPlan subgraph_strategy(const Graph& g, const InvariantReport& r, Strategy strategy) {
  using strategy_detail::push_unique;
  SubgraphPlan plan;
  const std::vector<VertexSet> classes = color_classes(r.witnesses.coloring);
  plan.independent_families.push_back(classes);

  if (strategy == Strategy::heuristic) {
    push_unique(plan.subgraphs, g.vertices());
    push_unique(plan.subgraphs, r.witnesses.independent);
    if (r.witnesses.excess) push_unique(plan.subgraphs, *r.witnesses.excess);
    if (const auto& k = r.witnesses.complement_cut; k && !k->empty() && is_vertex_cut(complement(g), *k))
      plan.cuts.push_back(*k);
    plan.independent_families.push_back({r.witnesses.independent});
    return plan;
  }

  if (g.order() > kExhaustiveStrategyGuard)
    throw DomainError("exhaustive strategy is limited to " + std::to_string(kExhaustiveStrategyGuard) +
                      " vertices, got " + std::to_string(g.order()));
  const std::uint64_t count = std::uint64_t{1} << g.order();
  std::vector<VertexSet> independent;
  for (std::uint64_t s = 1; s < count; ++s) {
    plan.subgraphs.push_back(VertexSet(s));
    if (g.is_independent(VertexSet(s))) independent.push_back(VertexSet(s));
  }
  plan.cuts = strategy_detail::minimal_complement_cuts(g);
  for (std::size_t i = 0; i < independent.size(); ++i) {
    plan.independent_families.push_back({independent[i]});
    for (std::size_t j = i + 1; j < independent.size(); ++j)
      if (!independent[i].intersects(independent[j]))
        plan.independent_families.push_back({independent[i], independent[j]});
  }
  return plan;
}

/// Calls fn(BoundEvaluation) for every proven bound under `plan`. Values
/// are exact; `sound` is left false for the caller to fill.
template <typename Fn>
void for_each_bound_evaluation(const Graph& g, const InvariantReport& r, const SubgraphPlan& plan,
                               SubgraphChromatic& chi, Fn&& fn) {
  const int omega = r.clique;
  const int delta = r.max_degree;
  auto emit = [&](BoundId id, Q4 value, BoundParams params) {
    fn(BoundEvaluation{id, std::move(params), value.to_rational(), false});
  };

  for (const auto& family : plan.independent_families) {
    BoundParams p;
    p.independent_sets = family;
    emit(BoundId::prop1, bound_prop1(r, g, family), std::move(p));
  }
  emit(BoundId::prop2, bound_prop2(r), {});
  for (VertexSet h : plan.subgraphs) {
    BoundParams p;
    p.subgraph = h;
    const int chi_h = chi(h);
    emit(BoundId::prop3, formula::prop3(omega, delta, r.n, chi_h, h.size()), p);
    emit(BoundId::cor5, formula::cor5(omega, delta, r.kappa_bar, chi_h, h.size()), p);
  }
  for (VertexSet k : plan.cuts) {
    const int chi_k = chi(k);
    const int alpha_k = independence_number(induced_subgraph(g, k)).size;
    BoundParams pk;
    pk.cut = k;
    emit(BoundId::cor6, formula::cor6(omega, delta, chi_k, alpha_k, r.independence), pk);
    for (VertexSet h : plan.subgraphs) {
      const VertexSet rest = h - k;
      if (rest.empty()) continue;
      BoundParams p;
      p.subgraph = h;
      p.cut = k;
      emit(BoundId::prop4, formula::prop4(omega, delta, chi_k, chi(rest), rest.size()), std::move(p));
    }
  }
  emit(BoundId::cor7, bound_cor7(r), {});
  if (r.excess) {
    emit(BoundId::cor9, bound_cor9(r), {});
    emit(BoundId::cor10, bound_cor10(r), {});
    emit(BoundId::cor11, bound_cor11(r), {});
  }
}

}  // namespace chilab::harness
