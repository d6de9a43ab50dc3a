#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "chilab/bounds.hpp"
#include "chilab/graph6.hpp"
#include "chilab/harness/parallel.hpp"
#include "chilab/harness/records.hpp"
#include "chilab/harness/source.hpp"
#include "chilab/harness/strategy.hpp"
#include "chilab/invariants.hpp"

namespace chilab::harness {

inline constexpr int kExcessGuard = 12;
inline constexpr int kPlainGuard = 16;

inline int default_guard(bool with_excess) { return with_excess ? kExcessGuard : kPlainGuard; }

/// A failed check: a proven bound below chi, a broken identity or lemma, an
/// uncertified witness or a graph6 round-trip mismatch.
struct Violation {
  std::string graph6;
  std::string check;
  std::string params;
  std::string value;
  int chi = 0;

  bool operator==(const Violation&) const = default;
};

struct VerificationSummary {
  std::uint64_t graphs_processed = 0;
  std::uint64_t graphs_skipped = 0;
  std::uint64_t bound_checks = 0;
  /// Graphs with alpha < 3, where the excess upper bound is only logged.
  std::uint64_t lemma_upper_unchecked = 0;
  std::vector<Violation> violations;
  std::chrono::duration<double> elapsed{0};

  bool passed() const { return violations.empty(); }
};

struct VerifyOptions {
  bool with_excess = false;
  Strategy strategy = Strategy::heuristic;
  bool fail_fast = false;
  /// 0 selects default_guard(with_excess).
  int max_n = 0;
  /// Oversize graphs abort the run instead of being skipped.
  bool abort_on_oversize = false;
  /// 0 selects worker_count_from_env().
  unsigned threads = 0;
  /// Test hook applied to every bound value before its soundness check.
  std::function<Rational(BoundId, const Rational&)> value_hook;
  /// Receives one record per processed graph (tightest value per bound).
  RecordWriter* records = nullptr;
  std::ostream* log = &std::cerr;
};

namespace verify_detail {

struct GraphVerification {
  bool skipped = false;
  ScanRecord record;
  std::uint64_t checks = 0;
  bool lemma_upper_unchecked = false;
  std::vector<Violation> violations;
};

inline GraphVerification verify_graph(const SourceItem& item, const VerifyOptions& opts, int guard) {
  GraphVerification out;
  const Graph& g = item.graph;
  if (g.order() > guard) {
    if (opts.abort_on_oversize)
      throw std::runtime_error("graph #" + std::to_string(item.index) + " has " + std::to_string(g.order()) +
                               " vertices, above the solver guard of " + std::to_string(guard));
    out.skipped = true;
    return out;
  }

  const InvariantReport r = invariant_report(g, opts.with_excess);
  auto fail = [&](std::string check, std::string params, std::string value) {
    out.violations.push_back(Violation{item.graph6, std::move(check), std::move(params), std::move(value), r.chromatic});
  };

  ++out.checks;
  if (encode_graph6(g) != item.graph6 || !(parse_graph6(item.graph6) == g))
    fail("graph6_roundtrip", "", item.graph6);

  for (const auto& msg : certify(g, r)) fail("witness", "", msg);
  ++out.checks;

  const SubgraphPlan plan = subgraph_strategy(g, r, opts.strategy);
  SubgraphChromatic chi(g, opts.strategy == Strategy::exhaustive);
  std::map<BoundId, BoundEvaluation> tightest;
  std::optional<Rational> cor9, cor10;

  for_each_bound_evaluation(g, r, plan, chi, [&](BoundEvaluation e) {
    if (opts.value_hook) e.value = opts.value_hook(e.id, e.value);
    e.sound = e.value >= r.chromatic;
    ++out.checks;
    if (!e.sound) fail(std::string(to_string(e.id)), to_json(e.params).dump(), exact_value(e.id, e.value));
    if (e.id == BoundId::cor9) cor9 = e.value;
    if (e.id == BoundId::cor10) cor10 = e.value;
    auto it = tightest.find(e.id);
    if (it == tightest.end()) tightest.emplace(e.id, std::move(e));
    else if (e.value < it->second.value) it->second = std::move(e);
  });

  if (r.excess) {
    const int eta = *r.excess;
    const int alpha = r.independence;
    ++out.checks;
    if (!cor9 || !cor10 || *cor9 != *cor10)
      fail("identity_cor9_cor10", "", (cor9 ? to_string(*cor9) : "?") + " vs " + (cor10 ? to_string(*cor10) : "?"));
    ++out.checks;
    if (!(alpha - 3 <= eta)) fail("lemma_alpha_minus_3_le_excess", "", std::to_string(eta));
    ++out.checks;
    if (!(eta >= r.n - 3 * r.chromatic)) fail("lemma_excess_ge_n_minus_3chi", "", std::to_string(eta));
    if (alpha >= 3) {
      ++out.checks;
      if (!(static_cast<long>(eta) * alpha <= static_cast<long>(alpha - 3) * r.n))
        fail("lemma_excess_le_scaled_n", "", std::to_string(eta));
    } else {
      out.lemma_upper_unchecked = true;
    }
  }

  out.record.index = item.index;
  out.record.graph6 = item.graph6;
  const int reed = reed_bound(r);
  out.record.reed_violation = r.chromatic > reed;
  if (r.n >= 2) out.record.kappa_log_ratio = r.kappa_bar / std::log2(static_cast<double>(r.n));
  for (auto& [id, e] : tightest) out.record.evaluations.push_back(std::move(e));
  out.record.evaluations.push_back(
      BoundEvaluation{BoundId::reed, {}, Rational(reed), reed >= r.chromatic});
  out.record.invariants = r;
  return out;
}

}  // namespace verify_detail

/// Checks every proven bound, the cor9/cor10 identity, both excess lemmas,
/// every invariant witness and the graph6 round trip on each graph of
/// `source`.
inline VerificationSummary verify_all(GraphSource& source, const VerifyOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  const int guard = opts.max_n > 0 ? opts.max_n : default_guard(opts.with_excess);
  const unsigned threads = opts.threads > 0 ? opts.threads : worker_count_from_env();
  VerificationSummary summary;

  run_ordered<verify_detail::GraphVerification>(
      source, threads, [&](const SourceItem& item) { return verify_detail::verify_graph(item, opts, guard); },
      [&](const SourceItem& item, verify_detail::GraphVerification& res) {
        if (res.skipped) {
          ++summary.graphs_skipped;
          if (opts.log)
            *opts.log << "warning: skipping graph #" << item.index << " (" << item.graph.order()
                      << " vertices, guard " << guard << ")\n";
          return true;
        }
        ++summary.graphs_processed;
        summary.bound_checks += res.checks;
        summary.lemma_upper_unchecked += res.lemma_upper_unchecked;
        if (opts.records) opts.records->write(res.record);
        const bool clean = res.violations.empty();
        for (auto& v : res.violations) summary.violations.push_back(std::move(v));
        return clean || !opts.fail_fast;
      });

  summary.elapsed = std::chrono::steady_clock::now() - start;
  return summary;
}

}  // namespace chilab::harness
