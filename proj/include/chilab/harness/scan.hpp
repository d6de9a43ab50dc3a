#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "chilab/bounds.hpp"
#include "chilab/harness/parallel.hpp"
#include "chilab/harness/records.hpp"
#include "chilab/harness/source.hpp"
#include "chilab/harness/strategy.hpp"
#include "chilab/harness/verify.hpp"
#include "chilab/invariants.hpp"

namespace chilab::harness {

struct ScanOptions {
  bool with_excess = false;
  Strategy strategy = Strategy::heuristic;
  /// 0 selects default_guard(with_excess).
  int max_n = 0;
  bool abort_on_oversize = false;
  /// 0 selects worker_count_from_env().
  unsigned threads = 0;
  RecordWriter* records = nullptr;
  std::ostream* log = &std::cerr;
};

/// Fields shared by every record kind: invariants, Reed flag and ratio.
inline ScanRecord base_record(const SourceItem& item, InvariantReport r) {
  ScanRecord rec;
  rec.index = item.index;
  rec.graph6 = item.graph6;
  rec.reed_violation = r.chromatic > reed_bound(r);
  if (r.n >= 2) rec.kappa_log_ratio = r.kappa_bar / std::log2(static_cast<double>(r.n));
  rec.invariants = std::move(r);
  return rec;
}

inline ScanRecord invariants_record(const SourceItem& item, bool with_excess) {
  return base_record(item, invariant_report(item.graph, with_excess));
}

/// Every proven bound under the strategy, plus the Reed value, each marked
/// sound or not.
inline ScanRecord bounds_record(const SourceItem& item, bool with_excess, Strategy strategy) {
  const Graph& g = item.graph;
  ScanRecord rec = base_record(item, invariant_report(g, with_excess));
  const InvariantReport& r = rec.invariants;
  const SubgraphPlan plan = subgraph_strategy(g, r, strategy);
  SubgraphChromatic chi(g, strategy == Strategy::exhaustive);
  for_each_bound_evaluation(g, r, plan, chi, [&](BoundEvaluation e) {
    e.sound = e.value >= r.chromatic;
    rec.evaluations.push_back(std::move(e));
  });
  const int reed = reed_bound(r);
  rec.evaluations.push_back(BoundEvaluation{BoundId::reed, {}, Rational(reed), reed >= r.chromatic});
  return rec;
}

namespace scan_detail {

struct Outcome {
  bool skipped = false;
  ScanRecord record;
};

// Shared driver: guard handling, ordered emission, record output.
template <typename Build, typename Visit>
void run_scan(GraphSource& source, const ScanOptions& opts, Build&& build, Visit&& visit) {
  const int guard = opts.max_n > 0 ? opts.max_n : default_guard(opts.with_excess);
  const unsigned threads = opts.threads > 0 ? opts.threads : worker_count_from_env();
  run_ordered<Outcome>(
      source, threads,
      [&](const SourceItem& item) {
        Outcome out;
        if (item.graph.order() > guard) {
          if (opts.abort_on_oversize)
            throw std::runtime_error("graph #" + std::to_string(item.index) + " has " +
                                     std::to_string(item.graph.order()) + " vertices, above the solver guard of " +
                                     std::to_string(guard));
          out.skipped = true;
          return out;
        }
        out.record = build(item);
        return out;
      },
      [&](const SourceItem& item, Outcome& out) {
        if (out.skipped) {
          if (opts.log)
            *opts.log << "warning: skipping graph #" << item.index << " (" << item.graph.order()
                      << " vertices, guard " << guard << ")\n";
          visit(nullptr);
          return true;
        }
        if (opts.records) opts.records->write(out.record);
        visit(&out.record);
        return true;
      });
}

}  // namespace scan_detail

struct RecordRunSummary {
  std::uint64_t graphs_processed = 0;
  std::uint64_t graphs_skipped = 0;
  /// Proven-bound evaluations below chi (bounds runs only).
  std::uint64_t unsound = 0;
};

/// Invariant records (with_excess per opts) for every graph.
inline RecordRunSummary run_invariants(GraphSource& source, const ScanOptions& opts) {
  RecordRunSummary summary;
  scan_detail::run_scan(
      source, opts, [&](const SourceItem& item) { return invariants_record(item, opts.with_excess); },
      [&](const ScanRecord* rec) { rec ? ++summary.graphs_processed : ++summary.graphs_skipped; });
  return summary;
}

inline RecordRunSummary run_bounds(GraphSource& source, const ScanOptions& opts) {
  RecordRunSummary summary;
  scan_detail::run_scan(
      source, opts, [&](const SourceItem& item) { return bounds_record(item, opts.with_excess, opts.strategy); },
      [&](const ScanRecord* rec) {
        if (!rec) {
          ++summary.graphs_skipped;
          return;
        }
        ++summary.graphs_processed;
        for (const auto& e : rec->evaluations)
          if (e.id != BoundId::reed && !e.sound) ++summary.unsound;
      });
  return summary;
}

struct ReedViolator {
  std::string graph6;
  int chromatic = 0;
  int reed = 0;
  std::optional<double> kappa_log_ratio;
};

struct ReedScanSummary {
  std::uint64_t graphs_processed = 0;
  std::uint64_t graphs_skipped = 0;
  std::vector<ReedViolator> violators;
  /// Minimum kappa_bar / log2 n over violators with n >= 2.
  std::optional<double> min_violator_ratio;
  std::chrono::duration<double> elapsed{0};
};

/// Process exit status for a Reed scan: 0 when clean, 3 ("notable") when a
/// violator turned up.
inline int exit_status(const ReedScanSummary& s) { return s.violators.empty() ? 0 : 3; }

/// Flags graphs with chi > ceil((omega + Delta + 1) / 2).
inline ReedScanSummary scan_reed(GraphSource& source, const ScanOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  ReedScanSummary summary;
  scan_detail::run_scan(
      source, opts,
      [&](const SourceItem& item) {
        ScanRecord rec = invariants_record(item, false);
        const int reed = reed_bound(rec.invariants);
        rec.evaluations.push_back(
            BoundEvaluation{BoundId::reed, {}, Rational(reed), reed >= rec.invariants.chromatic});
        return rec;
      },
      [&](const ScanRecord* rec) {
        if (!rec) {
          ++summary.graphs_skipped;
          return;
        }
        ++summary.graphs_processed;
        if (!rec->reed_violation) return;
        summary.violators.push_back(
            ReedViolator{rec->graph6, rec->invariants.chromatic, reed_bound(rec->invariants), rec->kappa_log_ratio});
        if (rec->kappa_log_ratio && (!summary.min_violator_ratio || *rec->kappa_log_ratio < *summary.min_violator_ratio))
          summary.min_violator_ratio = rec->kappa_log_ratio;
      });
  summary.elapsed = std::chrono::steady_clock::now() - start;
  return summary;
}

struct EpsTally {
  Rational eps;
  std::uint64_t bound_holds = 0;
  /// Graphs where the bound failed and the threshold branch was consulted.
  std::uint64_t threshold_consulted = 0;
};

struct DichotomyFailure {
  std::string graph6;
  Rational eps;
  /// "dichotomy" when both branches fail; "chain" when a bound violator
  /// breaks eps omega + alpha/4 < kappa_bar + 1/2.
  std::string kind;
};

struct EpsScanSummary {
  std::uint64_t graphs_processed = 0;
  std::uint64_t graphs_skipped = 0;
  std::vector<EpsTally> tallies;
  std::vector<DichotomyFailure> failures;
  std::chrono::duration<double> elapsed{0};

  bool passed() const { return failures.empty(); }
};

/// Verdicts of the eps-relaxed bound / complement-connectivity dichotomy
/// for one report.
inline std::vector<EpsVerdict> eps_verdicts(const InvariantReport& r, const std::vector<Rational>& eps_list) {
  std::vector<EpsVerdict> out;
  for (const Rational& eps : eps_list) {
    EpsVerdict v;
    v.eps = eps;
    v.bound_holds = Rational(r.chromatic) <= eps_bound(r, eps);
    v.threshold = prop12_threshold(r.n, eps);
    v.threshold_holds = r.kappa_bar >= v.threshold;
    out.push_back(v);
  }
  return out;
}

/// True iff eps omega + alpha/4 < kappa_bar + 1/2, the inequality every
/// eps-bound violator inherits from cor7.
inline bool eps_chain_holds(const InvariantReport& r, const Rational& eps) {
  return eps * r.clique + Rational(r.independence, 4) < Rational(2 * r.kappa_bar + 1, 2);
}

inline EpsScanSummary scan_eps(GraphSource& source, const std::vector<Rational>& eps_list, const ScanOptions& opts) {
  for (const Rational& eps : eps_list)
    if (eps <= 0) throw std::invalid_argument("epsilon must be positive, got " + to_string(eps));
  const auto start = std::chrono::steady_clock::now();
  EpsScanSummary summary;
  for (const Rational& eps : eps_list) summary.tallies.push_back(EpsTally{eps});

  scan_detail::run_scan(
      source, opts,
      [&](const SourceItem& item) {
        ScanRecord rec = invariants_record(item, false);
        rec.eps_verdicts = eps_verdicts(rec.invariants, eps_list);
        for (const Rational& eps : eps_list) {
          BoundEvaluation e{BoundId::eps, {}, eps_bound(rec.invariants, eps), false};
          e.params.eps = eps;
          e.sound = e.value >= rec.invariants.chromatic;
          rec.evaluations.push_back(std::move(e));
        }
        return rec;
      },
      [&](const ScanRecord* rec) {
        if (!rec) {
          ++summary.graphs_skipped;
          return;
        }
        ++summary.graphs_processed;
        for (std::size_t i = 0; i < eps_list.size(); ++i) {
          const EpsVerdict& v = rec->eps_verdicts[i];
          if (v.bound_holds) {
            ++summary.tallies[i].bound_holds;
            continue;
          }
          ++summary.tallies[i].threshold_consulted;
          if (!eps_chain_holds(rec->invariants, v.eps))
            summary.failures.push_back(DichotomyFailure{rec->graph6, v.eps, "chain"});
          if (!v.threshold_holds) summary.failures.push_back(DichotomyFailure{rec->graph6, v.eps, "dichotomy"});
        }
      });
  summary.elapsed = std::chrono::steady_clock::now() - start;
  return summary;
}

}  // namespace chilab::harness
