#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "chilab/coloring.hpp"
#include "chilab/connectivity.hpp"
#include "chilab/graph.hpp"
#include "chilab/invariants.hpp"
#include "chilab/q4.hpp"
#include "chilab/rational.hpp"

namespace chilab {

/// Invalid bound parameters (overlapping or non-independent sets, a K that
/// is not a cut of the complement).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A bound needs an invariant the report was built without.
class MissingInvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class BoundId { prop1, prop2, prop3, prop4, cor5, cor6, cor7, cor9, cor10, cor11, reed, eps };

inline constexpr BoundId kProvenBounds[] = {BoundId::prop1, BoundId::prop2, BoundId::prop3, BoundId::prop4,
                                            BoundId::cor5,  BoundId::cor6,  BoundId::cor7,  BoundId::cor9,
                                            BoundId::cor10, BoundId::cor11};

inline std::string_view to_string(BoundId id) {
  switch (id) {
    case BoundId::prop1: return "prop1";
    case BoundId::prop2: return "prop2";
    case BoundId::prop3: return "prop3";
    case BoundId::prop4: return "prop4";
    case BoundId::cor5: return "cor5";
    case BoundId::cor6: return "cor6";
    case BoundId::cor7: return "cor7";
    case BoundId::cor9: return "cor9";
    case BoundId::cor10: return "cor10";
    case BoundId::cor11: return "cor11";
    case BoundId::reed: return "reed";
    case BoundId::eps: return "eps";
  }
  return "?";
}

inline BoundId bound_id_from_string(std::string_view name) {
  for (BoundId id : {BoundId::prop1, BoundId::prop2, BoundId::prop3, BoundId::prop4, BoundId::cor5, BoundId::cor6,
                     BoundId::cor7, BoundId::cor9, BoundId::cor10, BoundId::cor11, BoundId::reed, BoundId::eps})
    if (to_string(id) == name) return id;
  throw std::invalid_argument("unknown bound id '" + std::string(name) + "'");
}

/// Which parameters a bound consumes.
inline bool uses_subgraph(BoundId id) { return id == BoundId::prop3 || id == BoundId::prop4 || id == BoundId::cor5; }
inline bool uses_cut(BoundId id) { return id == BoundId::prop4 || id == BoundId::cor6; }

struct BoundParams {
  std::optional<VertexSet> subgraph;
  std::optional<VertexSet> cut;
  std::optional<std::vector<VertexSet>> independent_sets;
  std::optional<Rational> eps;

  bool operator==(const BoundParams&) const = default;
};

struct BoundEvaluation {
  BoundId id = BoundId::prop2;
  BoundParams params;
  /// Quarter-integer for every bound except eps.
  Rational value;
  /// value >= chi; filled in by the harness.
  bool sound = false;

  bool operator==(const BoundEvaluation&) const = default;
};

/// The bound formulas on plain integers, all scaled by 4. Named arguments
/// follow the invariant names in InvariantReport.
namespace formula {

/// 1/2 (omega + Delta + 1), the leading term shared by most bounds.
constexpr Q4 half_reed(int omega, int max_degree) { return Q4::from_quarters(2 * (omega + max_degree + 1)); }

constexpr Q4 prop1(int omega, int n, int total_size, int m) {
  return Q4::from_quarters(2 * (omega + n - total_size + 2 * m - 1));
}
constexpr Q4 prop2(int omega, int max_degree, int n) { return Q4::from_quarters(2 * omega + n + max_degree + 1); }
constexpr Q4 prop3(int omega, int max_degree, int n, int chi_h, int size_h) {
  return prop2(omega, max_degree, n) + Q4::from_quarters(3 * chi_h - size_h);
}
constexpr Q4 prop4(int omega, int max_degree, int chi_k, int chi_rest, int size_rest) {
  return half_reed(omega, max_degree) + Q4::from_quarters(4 * chi_k + 3 * chi_rest - size_rest);
}
constexpr Q4 cor5(int omega, int max_degree, int kappa_bar, int chi_h, int size_h) {
  return half_reed(omega, max_degree) + Q4::from_quarters(5 * kappa_bar + 3 * chi_h - size_h);
}
constexpr Q4 cor6(int omega, int max_degree, int chi_k, int alpha_k, int alpha) {
  return half_reed(omega, max_degree) + Q4::from_quarters(4 * chi_k + alpha_k + 3 - alpha);
}
constexpr Q4 cor7(int omega, int max_degree, int kappa_bar, int alpha) {
  return half_reed(omega, max_degree) + Q4::from_quarters(4 * kappa_bar + 4 - alpha);
}
constexpr Q4 cor9(int omega, int max_degree, int n, int excess) {
  return prop2(omega, max_degree, n) - Q4::from_quarters(excess);
}
constexpr Q4 cor10(int omega, int max_degree, int delta_bar, int excess) {
  return half_reed(omega, max_degree) + Q4::from_quarters(delta_bar - excess);
}
constexpr Q4 cor11(int omega, int max_degree, int kappa_bar, int excess) {
  return half_reed(omega, max_degree) + Q4::from_quarters(5 * kappa_bar - excess);
}

}  // namespace formula

/// ceil((omega + Delta + 1) / 2)
inline int reed_bound(const InvariantReport& r) { return (r.clique + r.max_degree + 2) / 2; }

/// Needs m >= 1 sets: with none the right-hand side is 1/2 (omega + n - 1),
/// which already fails on K_2.
inline Q4 bound_prop1(const InvariantReport& r, const Graph& g, const std::vector<VertexSet>& sets) {
  if (sets.empty()) throw ValidationError("prop1 needs at least one independent set");
  VertexSet seen;
  int total = 0;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const VertexSet s = sets[i];
    const std::string name = "independent set #" + std::to_string(i);
    if (s.empty()) throw ValidationError(name + " is empty");
    if (!s.is_subset_of(g.vertices())) throw ValidationError(name + " exceeds the vertex range");
    if (!g.is_independent(s)) throw ValidationError(name + " is not independent");
    if (s.intersects(seen)) throw ValidationError(name + " overlaps an earlier set");
    seen |= s;
    total += s.size();
  }
  return formula::prop1(r.clique, r.n, total, static_cast<int>(sets.size()));
}

inline Q4 bound_prop1(const Graph& g, const std::vector<VertexSet>& sets) {
  InvariantReport r;
  r.n = g.order();
  r.clique = clique_number(g).size;
  return bound_prop1(r, g, sets);
}

inline Q4 bound_prop2(const InvariantReport& r) { return formula::prop2(r.clique, r.max_degree, r.n); }

/// `h` describes a non-empty induced subgraph of the graph behind `r`.
inline Q4 bound_prop3(const InvariantReport& r, const InvariantReport& h) {
  return formula::prop3(r.clique, r.max_degree, r.n, h.chromatic, h.n);
}

/// Throws ValidationError unless removing k from the complement of g leaves
/// at least two components.
inline void require_complement_cut(const Graph& g, VertexSet k) {
  if (k.empty()) throw ValidationError("cut set K is empty");
  if (!k.is_subset_of(g.vertices())) throw ValidationError("cut set K exceeds the vertex range");
  if (!is_vertex_cut(complement(g), k)) throw ValidationError("K is not a vertex cut of the complement");
}

inline Q4 bound_prop4(const InvariantReport& r, const Graph& g, VertexSet k, VertexSet h) {
  require_complement_cut(g, k);
  if (h.empty()) throw DomainError("subgraph H is empty");
  if (!h.is_subset_of(g.vertices())) throw DomainError("subgraph H exceeds the vertex range");
  const VertexSet rest = h - k;
  if (rest.empty()) throw DomainError("H minus K is empty");
  const int chi_k = chromatic_number(induced_subgraph(g, k)).colors;
  const int chi_rest = chromatic_number(induced_subgraph(g, rest)).colors;
  return formula::prop4(r.clique, r.max_degree, chi_k, chi_rest, rest.size());
}

inline Q4 bound_prop4(const Graph& g, VertexSet k, VertexSet h) {
  InvariantReport r;
  r.clique = clique_number(g).size;
  r.max_degree = g.max_degree();
  return bound_prop4(r, g, k, h);
}

inline Q4 bound_cor5(const InvariantReport& r, const InvariantReport& h) {
  return formula::cor5(r.clique, r.max_degree, r.kappa_bar, h.chromatic, h.n);
}

inline Q4 bound_cor6(const InvariantReport& r, const Graph& g, VertexSet k) {
  require_complement_cut(g, k);
  const Graph gk = induced_subgraph(g, k);
  return formula::cor6(r.clique, r.max_degree, chromatic_number(gk).colors, independence_number(gk).size,
                       r.independence);
}

inline Q4 bound_cor6(const Graph& g, VertexSet k) {
  InvariantReport r;
  r.clique = clique_number(g).size;
  r.max_degree = g.max_degree();
  r.independence = independence_number(g).size;
  return bound_cor6(r, g, k);
}

inline Q4 bound_cor7(const InvariantReport& r) {
  return formula::cor7(r.clique, r.max_degree, r.kappa_bar, r.independence);
}

namespace bounds_detail {
inline int require_excess(const InvariantReport& r, BoundId id) {
  if (!r.excess) throw MissingInvariantError(std::string(to_string(id)) + " needs the chromatic excess");
  return *r.excess;
}
}  // namespace bounds_detail

inline Q4 bound_cor9(const InvariantReport& r) {
  return formula::cor9(r.clique, r.max_degree, r.n, bounds_detail::require_excess(r, BoundId::cor9));
}

inline Q4 bound_cor10(const InvariantReport& r) {
  return formula::cor10(r.clique, r.max_degree, r.delta_bar, bounds_detail::require_excess(r, BoundId::cor10));
}

inline Q4 bound_cor11(const InvariantReport& r) {
  return formula::cor11(r.clique, r.max_degree, r.kappa_bar, bounds_detail::require_excess(r, BoundId::cor11));
}

/// (1/2 + eps) omega + (Delta + 2) / 2
inline Rational eps_bound(const InvariantReport& r, const Rational& eps) {
  if (eps <= 0) throw std::invalid_argument("epsilon must be positive, got " + to_string(eps));
  return (Rational(1, 2) + eps) * r.clique + Rational(r.max_degree + 2, 2);
}

/// Erdos-Szekeres: R(s, t) <= C(s + t - 2, s - 1).
inline std::uint64_t ramsey_upper(int s, int t) {
  if (s < 1 || t < 1) throw std::invalid_argument("Ramsey arguments must be positive");
  const std::uint64_t top = static_cast<std::uint64_t>(s + t - 2);
  const std::uint64_t k = static_cast<std::uint64_t>(std::min(s, t) - 1);
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (top - k + i) / i;
    if (acc > static_cast<unsigned __int128>(~std::uint64_t{0})) throw std::overflow_error("Ramsey bound overflows");
  }
  return static_cast<std::uint64_t>(acc);
}

/// Lower bound on kappa(complement) for any graph on n vertices that
/// violates eps_bound:
///   T(n, eps) = (log2 n - 2 - 1/(2 eps)) / (4 + 1/eps), clamped at 0.
///
/// Derivation. If chi > 1/2 (omega + Delta + 1) + eps omega + 1/2 while
/// chi <= 1/2 (omega + Delta + 1) + kappa_bar + 1 - alpha/4, then
/// eps omega + alpha/4 < kappa_bar + 1/2, so alpha < 4 kappa_bar + 2 and
/// omega < (kappa_bar + 1/2) / eps. The graph has no clique of size
/// omega + 1 and no independent set of size alpha + 1, hence
/// n < R(omega + 1, alpha + 1) <= C(alpha + omega, alpha) <= 2^(alpha + omega),
/// giving log2 n < (4 + 1/eps) kappa_bar + 2 + 1/(2 eps).
inline double prop12_threshold(int n, const Rational& eps) {
  if (eps <= 0) throw std::invalid_argument("epsilon must be positive, got " + to_string(eps));
  const double e = to_double(eps);
  const double t = (std::log2(static_cast<double>(n)) - 2.0 - 1.0 / (2.0 * e)) / (4.0 + 1.0 / e);
  return std::max(0.0, t);
}

/// Same argument without the final 2^(alpha + omega) relaxation: the least
/// k >= 0 for which some alpha, omega >= 1 satisfy
/// eps omega + alpha/4 < k + 1/2 and C(alpha + omega, alpha) > n. Never
/// below prop12_threshold.
inline int prop12_ramsey_threshold(int n, const Rational& eps) {
  if (eps <= 0) throw std::invalid_argument("epsilon must be positive, got " + to_string(eps));
  for (int k = 0;; ++k) {
    const Rational slack = Rational(2 * k + 1, 2);
    for (int alpha = 1; Rational(alpha, 4) + eps < slack; ++alpha) {
      for (int omega = 1; eps * omega + Rational(alpha, 4) < slack; ++omega) {
        std::uint64_t r = 0;
        try {
          r = ramsey_upper(alpha + 1, omega + 1);
        } catch (const std::overflow_error&) {
          return k;
        }
        if (r > static_cast<std::uint64_t>(n)) return k;
      }
    }
  }
}

}  // namespace chilab
